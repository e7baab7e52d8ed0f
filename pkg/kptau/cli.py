# -*- coding: utf-8 -*-

"""Console script for kptau."""

import logging
import os

import click

from .config import read_settings
from .errors import (CalibrationError, ConsistencyError, ConventionError,
                     CutoffError)
from .fermion import calibrate as _calibrate
from .output import render_json, write_atomic
from .pipeline import (EXIT_INCONSISTENT, RunConfig, SUITES, run)
from .scalars import parse_bindings

ENGINES = ['nodes', 'fermionic', 'cutjoin']
FORMATS = ['json', 'csv', 'text']


def _configure_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, format='%(asctime)s %(name)s %(levelname)s %(message)s')
    logging.getLogger('kptau').setLevel(level)


def _output_path(settings, output):
    if output is None or os.path.isabs(output):
        return output
    return os.path.join(settings.output_dir, output)


def _suites(text):
    if not text:
        return None
    suites = [s.strip() for s in text.split(',') if s.strip()]
    for suite in suites:
        if suite not in SUITES:
            raise click.BadParameter(
                'Unknown suite {!r}; choose from {}.'.format(
                    suite, ', '.join(SUITES)), param_hint='--suite')
    return suites


def _bindings(items):
    try:
        return parse_bindings(items)
    except ValueError as error:
        raise click.BadParameter(str(error), param_hint='--subst')


def _execute(ctx, command, **kwargs):
    '''
    Build the RunConfig, run it and map failures onto exit codes: 1 for a
    failed verification, 2 for usage errors, 3 for inconsistencies.
    '''
    settings = read_settings()
    _configure_logging(kwargs.pop('verbose'))
    threads = kwargs.pop('threads')
    seed = kwargs.pop('seed')
    out_format = kwargs.pop('out_format')
    output = kwargs.pop('output')
    try:
        config = RunConfig(
            command,
            threads=settings.threads if threads is None else threads,
            seed=settings.seed if seed is None else seed,
            out_format=out_format or settings.format,
            output=_output_path(settings, output),
            calibration_grade=settings.calibration_grade,
            max_offset=settings.max_offset,
            **kwargs)
        status, text = run(config)
    except (ConsistencyError, CalibrationError, ConventionError,
            CutoffError) as error:
        click.echo('Internal inconsistency: {}'.format(error), err=True)
        ctx.exit(EXIT_INCONSISTENT)
    except ValueError as error:
        raise click.UsageError(str(error), ctx=ctx)
    if text:
        click.echo(text, nl=False)
    if status:
        click.echo('{} failed.'.format(command), err=True)
    ctx.exit(status)


def common_options(f):
    options = [
        click.option('--model', '-m', default='kw',
                     help='kw, bgw or gkm:<n>. Default = kw.'),
        click.option('--subst', 'subst', multiple=True,
                     help='Parameter binding such as N=1/2; repeatable.'),
        click.option('--out', 'out_format', default=None,
                     type=click.Choice(FORMATS),
                     help='Output format. Default from kptau.cfg.'),
        click.option('--output', '-o', default=None, type=str,
                     help='Write the result to this file instead of stdout.'),
        click.option('--threads', '-p', default=None, type=int,
                     help='Number of processes to use.'),
        click.option('--seed', default=None, type=int,
                     help='Seed for randomized property checks.'),
        click.option('--verbose', '-v', count=True,
                     help='Log progress; repeat for debug output.'),
    ]
    for option in reversed(options):
        f = option(f)
    return f


@click.group()
def main(args=None):
    pass


@main.command()
@common_options
@click.option('--engine', '-e', default=None, type=click.Choice(ENGINES),
              help='nodes, fermionic or cutjoin.')
@click.option('--degree', '-d', default=6, type=int,
              help='Largest grade (power of h) to compute. Default = 6.')
@click.option('--hbar', is_flag=True,
              help='Multiply every grade-d component by h^d.')
@click.pass_context
def tau(ctx, model, subst, engine, degree, hbar, **kwargs):
    '''
    Compute the tau-function series of a model through a given grade.
    '''
    _execute(ctx, 'tau', model=model, engine=engine, degree=degree,
             hbar=hbar, bindings=_bindings(subst), **kwargs)


@main.command()
@common_options
@click.option('--engine', '-e', default=None, type=click.Choice(ENGINES),
              help='Engine producing the series under test.')
@click.option('--degree', '-d', default=8, type=int,
              help='Largest grade to check. Default = 8.')
@click.option('--suite', '-s', default=None, type=str,
              help='Comma-separated suites: {}.'.format(', '.join(SUITES)))
@click.pass_context
def verify(ctx, model, subst, engine, degree, suite, **kwargs):
    '''
    Run verification suites on a computed series; exits 1 on any failure.
    '''
    _execute(ctx, 'verify', model=model, engine=engine, degree=degree,
             suites=_suites(suite), bindings=_bindings(subst), **kwargs)


@main.command()
@common_options
@click.option('--which', '-w', default='all', type=str,
              help='K, X, P, K_star, P_star, R, W or all.')
@click.pass_context
def ops(ctx, model, subst, which, **kwargs):
    '''
    Print the Kac-Schwarz operators of a model in normal form.
    '''
    if kwargs.get('out_format') is None:
        kwargs['out_format'] = 'text'
    _execute(ctx, 'ops', model=model, which=which,
             bindings=_bindings(subst), **kwargs)


@main.command()
@common_options
@click.option('--count', '-n', default=4, type=int,
              help='Number of basis vectors. Default = 4.')
@click.option('--order', default=8, type=int,
              help='Truncation order in 1/z. Default = 8.')
@click.pass_context
def grassmannian(ctx, model, subst, count, order, **kwargs):
    '''
    Compute the canonical Grassmannian basis of a model.
    '''
    _execute(ctx, 'grassmannian', model=model, count=count, order=order,
             bindings=_bindings(subst), **kwargs)


@main.command()
@click.option('--grade', default=None, type=int,
              help='Largest state grade used. Default from kptau.cfg.')
@click.option('--output', '-o', default=None, type=str,
              help='Write the report to this file.')
def calibrate(grade, output):
    '''
    Fix and report the fermionic mode convention.
    '''
    settings = read_settings()
    try:
        report = _calibrate(grade or settings.calibration_grade,
                            settings.max_offset)
    except CalibrationError as error:
        click.echo(str(error), err=True)
        raise SystemExit(EXIT_INCONSISTENT)
    text = render_json(report.to_json())
    if output:
        write_atomic(text, _output_path(settings, output))
    else:
        click.echo(text, nl=False)
