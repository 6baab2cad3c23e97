"""Command-line entry point: ``featurehash <subcommand> [options]``.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click

from featurehash.datasets import DataError
from featurehash.experiments import (
    ExperimentConfig,
    Method,
    encode_document,
    run_sms,
    run_synthetic,
    run_wili,
    write_rows,
)
from featurehash.textseg import TokenizerSpec, TokenMode
from featurehash.vecspace import FeatureVector, cosine

EXIT_USAGE = 1
EXIT_DATA = 2

METHOD_CHOICES = [m.value for m in Method]


def _parse_dims(value: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")
    if not dims:
        raise click.BadParameter("at least one exponent is required")
    return dims


def _dims_callback(ctx, param, value):
    return None if value is None else _parse_dims(value)


def experiment_options(default_dims: str, default_trials: int):
    def decorate(fn):
        options = [
            click.option("--method", "methods", multiple=True, type=click.Choice(METHOD_CHOICES),
                         help="Encoder; repeat to run several. Default: ah and ht."),
            click.option("--ngram", default=3, show_default=True, help="Character n-gram length."),
            click.option("--dims", default=default_dims, show_default=True, callback=_dims_callback,
                         help="Comma-separated exponents l, L = 2^l."),
            click.option("--trials", default=default_trials, show_default=True),
            click.option("--seed", default=0, show_default=True, type=click.IntRange(0, 2**64 - 1)),
            click.option("--data", type=click.Path(path_type=Path), help="Corpus directory or file."),
            click.option("--out", type=click.Path(path_type=Path), help="Output file (default stdout)."),
            click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
                         show_default=True),
            click.option("--lowercase", is_flag=True, help="Lowercase text before tokenizing."),
        ]
        for option in reversed(options):
            fn = option(fn)
        return fn

    return decorate


def _config(methods, ngram, dims, trials, seed, data, lowercase, **extra) -> ExperimentConfig:
    try:
        return ExperimentConfig(
            methods=tuple(methods) or (Method.AH, Method.HT),
            ngram=ngram,
            dim_exponents=dims,
            trials=trials,
            seed=seed,
            data=data,
            lowercase=lowercase,
            **extra,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _emit(rows, out, fmt):
    text = write_rows(rows, out, fmt)
    if out is None:
        click.echo(text, nl=False)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose: bool):
    """Additive hashing vs. the hashing trick: encoders and experiments."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


@main.command()
@experiment_options("7,8,9,10", 100)
@click.option("--length", "string_length", default=100, show_default=True, help="Random string length M.")
def synthetic(methods, ngram, dims, trials, seed, data, out, fmt, lowercase, string_length):
    """Similarity of random strings vs. perturbed copies over a p grid."""
    cfg = _config(methods, ngram, dims, trials, seed, data, lowercase, string_length=string_length)
    _emit(run_synthetic(cfg), out, fmt)


@main.command()
@experiment_options("4,5,6,7,8,9,10,11,12", 1)
@click.option("--subset-languages", "languages", default=20, show_default=True)
@click.option("--per-class", default=100, show_default=True)
@click.option("--full", is_flag=True, help="Use the whole corpus (slow).")
def wili(methods, ngram, dims, trials, seed, data, out, fmt, lowercase, languages, per_class, full):
    """Nearest-neighbor language identification on WiLI-2018."""
    if data is None:
        raise click.UsageError("--data DIR is required")
    if full:
        click.echo("warning: --full runs on the whole corpus and can take hours", err=True)
    cfg = _config(methods, ngram, dims, trials, seed, data, lowercase,
                  languages=languages, per_class=per_class, full=full)
    _emit(run_wili(cfg), out, fmt)


@main.command()
@experiment_options("4,5,6,7,8,9,10,11,12,13", 100)
def sms(methods, ngram, dims, trials, seed, data, out, fmt, lowercase):
    """Nearest-neighbor spam filtering over repeated 50/50 splits."""
    if data is None:
        raise click.UsageError("--data FILE is required")
    cfg = _config(methods, ngram, dims, trials, seed, data, lowercase)
    _emit(run_sms(cfg), out, fmt)


def encoder_options(fn):
    options = [
        click.option("--method", type=click.Choice(METHOD_CHOICES), default="ah", show_default=True),
        click.option("--tokenizer", type=click.Choice([m.value for m in TokenMode]), default="ngram",
                     show_default=True),
        click.option("--ngram", default=3, show_default=True),
        click.option("--dims", default=10, show_default=True, type=click.IntRange(0, 24),
                     help="Exponent l, L = 2^l."),
        click.option("--lowercase", is_flag=True),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _vector(text, method, tokenizer, ngram, dims, lowercase) -> FeatureVector:
    try:
        spec = TokenizerSpec(tokenizer, ngram, lowercase)
        return encode_document(spec(text), method, 2**dims)
    except ValueError as exc:
        raise click.UsageError(str(exc))


@main.command()
@encoder_options
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="json", show_default=True)
@click.argument("text", required=False)
def encode(method, tokenizer, ngram, dims, lowercase, fmt, text):
    """Encode TEXT (or stdin) to a normalized vector."""
    if text is None:
        text = sys.stdin.read().rstrip("\n")
    values = _vector(text, method, tokenizer, ngram, dims, lowercase).tolist()
    if fmt == "json":
        click.echo(json.dumps(values))
    else:
        click.echo(",".join(repr(v) for v in values))


@main.command()
@encoder_options
@click.argument("first")
@click.argument("second")
def similarity(method, tokenizer, ngram, dims, lowercase, first, second):
    """Cosine similarity between two documents."""
    a = _vector(first, method, tokenizer, ngram, dims, lowercase)
    b = _vector(second, method, tokenizer, ngram, dims, lowercase)
    click.echo(repr(cosine(a, b)))


def run(argv=None) -> int:
    """Invoke the CLI and map failures to exit codes."""
    try:
        main.main(args=argv, prog_name="featurehash", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except DataError as exc:
        click.echo(f"data error: {exc}", err=True)
        return EXIT_DATA
    except OSError as exc:
        click.echo(f"data error: {exc}", err=True)
        return EXIT_DATA
    return 0


def entrypoint():
    sys.exit(run())


if __name__ == "__main__":
    entrypoint()
