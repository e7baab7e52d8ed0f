'''
Defaults from kptau.cfg, read the way the installed package finds its
config/ data file.
'''

import configparser
import os

DEFAULTS = {
    'kptau': {
        'threads': '1',
        'seed': '20',
        'output_dir': '.',
        'format': 'json',
    },
    'calibration': {
        'grade': '6',
        'max_offset': '3',
    },
}

CONFIG_PATHS = [
    os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', '..',
                 'config', 'kptau.cfg'),
    os.path.join(os.path.dirname(os.path.abspath(__file__)), '..',
                 'kptau.cfg'),
]

OUTPUT_DIR_ENV = 'KPTAU_OUTPUT_DIR'


class Settings(object):
    '''
    Flat view of the two config sections with typed accessors.
    '''
    def __init__(self, parser):
        self.threads = parser.getint('kptau', 'threads')
        self.seed = parser.getint('kptau', 'seed')
        self.output_dir = parser.get('kptau', 'output_dir')
        self.format = parser.get('kptau', 'format')
        self.calibration_grade = parser.getint('calibration', 'grade')
        self.max_offset = parser.getint('calibration', 'max_offset')
        if self.format not in ('json', 'csv'):
            raise ValueError('Output format must be json or csv, not {}.'.format(
                self.format))

    def as_dict(self):
        return dict(self.__dict__)


def read_settings(paths=None, environ=None):
    '''
    Built-in defaults, then the first existing config file, then the output
    directory override from the environment.
    '''
    parser = configparser.ConfigParser()
    parser.read_dict(DEFAULTS)
    for path in (CONFIG_PATHS if paths is None else paths):
        if os.path.exists(path):
            parser.read(path)
            break
    environ = os.environ if environ is None else environ
    if environ.get(OUTPUT_DIR_ENV):
        parser.set('kptau', 'output_dir', environ[OUTPUT_DIR_ENV])
    return Settings(parser)
