#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The setup script."""

from setuptools import setup, find_packages

with open('README.md') as readme_file:
    readme = readme_file.read()

with open('HISTORY.md') as history_file:
    history = history_file.read()

requirements = [
    'Click>=7.0',
    'regex>=2017.6.23',
]

setup_requirements = [
    'pytest-runner',
]

test_requirements = [
    'pytest',
    'sympy>=1.5',
]

setup(
    name='kptau',
    version='0.1.0',
    description="Exact series for KW, BGW and monomial GKM tau-functions",
    long_description=readme + '\n\n' + history,
    long_description_content_type='text/markdown',
    author="kptau developers",
    author_email='kptau@users.noreply.github.com',
    packages=find_packages(include=['kptau']),
    entry_points={
        'console_scripts': [
            'kptau=kptau.cli:main'
        ]
    },
    include_package_data=True,
    install_requires=requirements,
    python_requires='>=3.5',
    license="MIT license",
    zip_safe=False,
    keywords='kptau',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    test_suite='tests',
    tests_require=test_requirements,
    extras_require={'test': test_requirements},
    setup_requires=setup_requirements,
    data_files=[('config', ['kptau.cfg'])],
)
