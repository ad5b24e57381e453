# encoding: utf-8
"""
The `pygentle` command line tool.

Subcommands:
    check           validate an algebra file
    basis           the basis Θ(v, w) of a morphism space
    homdim          the dimension of a morphism space
    table           pairwise dimensions over an enumeration window
    bands           dimensions between r-dimensional band complexes
    ar              irreducible maps over an enumeration window
    oracle-compare  combinatorial dimensions against the linear algebra oracle
    discrete        the derived-discrete algebra Λ(r,n,m)
    unfold          the unfolded diagram of a word

Exit codes: 0 on success, 1 on a domain error or oracle mismatch, 2 on a
usage error.

Classes:
    RunConfig

Functions:
    run()
    main()

$Id$
"""

import argparse
import logging
import sys
from pyGentle.common import GentleError
from pyGentle import fields, quivers, words, complexes, morphisms, bands, arquiver, oracle
from pyGentle.results import Recorder, files
from pyGentle.multisweep import MultiSweep
from pyGentle.random import NumpyRNG
from pyGentle.utility import init_logging, Timer

logger = logging.getLogger("pyGentle")

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class RunConfig(object):
    """The options shared by all subcommands."""

    def __init__(self, algebra=None, field=fields.DEFAULT_FIELD, max_letters=3, window=(-1, 1),
                 format="tsv", output=None, processes=1, debug=False, logfile=None):
        self.algebra = algebra
        self.field = field
        self.max_letters = max_letters
        self.window = tuple(window)
        self.format = format
        self.output = output
        self.processes = processes
        self.debug = debug
        self.logfile = logfile

    @classmethod
    def from_args(cls, args):
        return cls(algebra=getattr(args, "algebra", None), field=args.field, max_letters=args.max_letters,
                   window=args.window, format=args.format, output=args.output,
                   processes=args.processes, debug=args.debug, logfile=args.logfile)

    def problems(self):
        found = []
        if self.max_letters < 1:
            found.append("--max-letters must be positive")
        if self.window[0] > self.window[1]:
            found.append("--window %d %d is empty" % self.window)
        if self.processes < 1:
            found.append("--processes must be positive")
        return found


# ==============================================================================
#   Sweep tasks (module level so that worker processes can import them)
# ==============================================================================

_algebras = {}

def _algebra_from_text(text):
    if text not in _algebras:
        _algebras[text] = quivers.parse_algebra(text)
    return _algebras[text]

def homdim_task(algebra_text, v_text, w_text, with_oracle):
    """(dim, oracle dim or "-") for one pair of word literals."""
    algebra = _algebra_from_text(algebra_text)
    v = words.parse_word(v_text, algebra)
    w = words.parse_word(w_text, algebra)
    dim = morphisms.hom_dim(v, w)
    if not with_oracle or v.is_infinite() or w.is_infinite():
        return dim, "-"
    return dim, oracle.oracle_hom_dim(complexes.build_complex(v), complexes.build_complex(w))


# ==============================================================================
#   Helpers
# ==============================================================================

def _load(config):
    return quivers.load_algebra(config.algebra)

def _window_words(algebra, config, with_bands=False):
    strings, band_words = words.enumerate_words(algebra, config.max_letters, config.window)
    logger.info("window: %d strings, %d bands" % (len(strings), len(band_words)))
    return strings + band_words if with_bands else strings

def _metadata(config, algebra, **extra):
    metadata = {"algebra": algebra.name, "field": fields.active_field().spec()}
    metadata.update(extra)
    return metadata

def _stream(config, stdout):
    return config.output or stdout

def _pair_table(config, algebra, word_list, with_oracle):
    """Return the Recorder of all ordered pairs and the first mismatching row."""
    text = algebra.to_text()
    literals = [words.format_word(w) for w in word_list]
    tasks = [(text, v, w, with_oracle) for v in literals for w in literals]
    timer = Timer()
    values = MultiSweep(homdim_task, config.processes).map(tasks)
    logger.info("%d pairs in %s" % (len(tasks), Timer.time_in_words(timer.elapsedTime()) or "0 seconds"))
    recorder = Recorder("homdim", metadata=_metadata(config, algebra, max_letters=config.max_letters,
                                                     window="%d %d" % config.window))
    for (_, v, w, _), (dim, oracle_dim) in zip(tasks, values):
        recorder.record((v, w, dim, oracle_dim))
    mismatches = [row for row in recorder.get() if row[3] != "-" and row[2] != row[3]]
    return recorder, (mismatches[0] if mismatches else None)


# ==============================================================================
#   Subcommands
# ==============================================================================

def cmd_check(config, args, stdout):
    algebra = _load(config)
    stdout.write("gentle: OK, |C(Λ)|=%d\n" % len(quivers.cycle_arrows(algebra)))
    return EXIT_OK

def cmd_homdim(config, args, stdout):
    algebra = _load(config)
    v = words.parse_word(args.source, algebra)
    w = words.parse_word(args.target, algebra)
    dim = morphisms.hom_dim(v, w)
    stdout.write("%d\n" % dim)
    if args.oracle:
        expected = oracle.oracle_hom_dim(complexes.build_complex(v), complexes.build_complex(w))
        if expected != dim:
            sys.stderr.write("oracle disagrees: %d\n" % expected)
            return EXIT_DOMAIN
    return EXIT_OK

def cmd_basis(config, args, stdout):
    algebra = _load(config)
    v = words.parse_word(args.source, algebra)
    w = words.parse_word(args.target, algebra)
    hom = morphisms.compute_hom(v, w)
    metadata = _metadata(config, algebra, source=words.format_word(v), target=words.format_word(w))
    if config.format == "json":
        files.JSONFile(_stream(config, stdout), mode='w').write(hom.to_json(), metadata)
        return EXIT_OK
    recorder = Recorder("basis", metadata=metadata)
    for i, f in enumerate(hom.theta):
        recorder.record((i, f.variant, words.format_word(f.source), words.format_word(f.target), str(f)))
    recorder.write(_stream(config, stdout), format=config.format)
    return EXIT_OK

def _emit_table(config, args, algebra, stdout):
    word_list = _window_words(algebra, config, with_bands=args.bands)
    recorder, mismatch = _pair_table(config, algebra, word_list, args.oracle)
    recorder.write(_stream(config, stdout), format=config.format)
    return mismatch

def cmd_table(config, args, stdout):
    _emit_table(config, args, _load(config), stdout)
    return EXIT_OK

def cmd_oracle_compare(config, args, stdout):
    algebra = _load(config)
    word_list = [w for w in _window_words(algebra, config, with_bands=args.bands) if not w.is_infinite()]
    if args.sample:
        rng = NumpyRNG(seed=args.seed)
        word_list = rng.subsample(word_list, args.sample)
        logger.info("compared words subsampled by %s" % rng.describe())
    recorder, mismatch = _pair_table(config, algebra, word_list, True)
    recorder.write(_stream(config, stdout), format=config.format)
    if mismatch is not None:
        sys.stderr.write("counterexample: %s %s (combinatorial %s, oracle %s)\n" % mismatch)
        return EXIT_DOMAIN
    return EXIT_OK

def cmd_bands(config, args, stdout):
    algebra = _load(config)
    x = words.parse_word(args.source, algebra, kind=words.BAND)
    y = words.parse_word(args.target, algebra, kind=words.BAND) if args.target else x
    rows = bands.band_grid(x, y, [fields.active_field().parse(l) for l in args.lambdas], args.dims, args.shifts)
    recorder = Recorder("bands", metadata=_metadata(config, algebra, source=words.format_word(x),
                                                    target=words.format_word(y)))
    recorder.extend(rows)
    recorder.write(_stream(config, stdout), format=config.format)
    return EXIT_OK

def cmd_ar(config, args, stdout):
    algebra = _load(config)
    word_list = _window_words(algebra, config)
    metadata = _metadata(config, algebra, max_letters=config.max_letters, window="%d %d" % config.window)
    if config.format == "json":
        traces = []
        for word in word_list:
            for step in (arquiver.left_step, arquiver.right_step):
                traces.append(step(word)[2].to_json())
        files.JSONFile(_stream(config, stdout), mode='w').write(traces, metadata)
        return EXIT_OK
    recorder = Recorder("ar", metadata=dict(metadata, name="ar"))
    for word in word_list:
        for f in arquiver.irreducible_maps(word):
            recorder.record((words.format_word(words.canonical_form(word)),
                             words.format_word(words.canonical_form(f.target)), f.variant))
    recorder.write(_stream(config, stdout), format=config.format)
    return EXIT_OK

def cmd_discrete(config, args, stdout):
    algebra = quivers.discrete_algebra(args.r, args.n, args.m)
    if not args.table:
        stdout.write(algebra.to_text())
        return EXIT_OK
    mismatch = _emit_table(config, args, algebra, stdout)
    if mismatch is not None:
        sys.stderr.write("counterexample: %s %s (combinatorial %s, oracle %s)\n" % mismatch)
        return EXIT_DOMAIN
    return EXIT_OK

def cmd_unfold(config, args, stdout):
    algebra = _load(config)
    word = words.parse_word(args.word, algebra)
    diagram = complexes.unfold(word)
    files.DotFile(_stream(config, stdout), mode='w').write(diagram.to_dot(), {})
    return EXIT_OK


# ==============================================================================
#   Argument parsing
# ==============================================================================

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=fields.DEFAULT_FIELD, help="gfp:<p> or rational")
    common.add_argument("--max-letters", type=int, default=3, dest="max_letters")
    common.add_argument("--window", type=int, nargs=2, default=(-1, 1), metavar=("LO", "HI"))
    common.add_argument("--format", choices=sorted(files.FORMATS), default="tsv")
    common.add_argument("--output", default=None, help="output file (default: standard output)")
    common.add_argument("--processes", type=int, default=1)
    common.add_argument("--debug", action="store_true")
    common.add_argument("--logfile", default=None)

    parser = argparse.ArgumentParser(prog="pygentle",
                                     description="Morphism spaces between complexes over gentle algebras.")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("check", parents=[common], help="validate an algebra file")
    p.add_argument("algebra")
    p.set_defaults(handler=cmd_check)

    for name, handler, helptext in (("basis", cmd_basis, "basis of Hom(Q_v, Q_w)"),
                                    ("homdim", cmd_homdim, "dimension of Hom(Q_v, Q_w)")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("algebra")
        p.add_argument("source", help="word literal v")
        p.add_argument("target", help="word literal w")
        if name == "homdim":
            p.add_argument("--oracle", action="store_true", help="also check against the oracle")
        p.set_defaults(handler=handler)

    p = sub.add_parser("table", parents=[common], help="pairwise dimensions over a window")
    p.add_argument("algebra")
    p.add_argument("--bands", action="store_true", help="include the enumerated bands")
    p.add_argument("--oracle", action="store_true", help="add the oracle dimension column")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("oracle-compare", parents=[common], help="compare with the oracle over a window")
    p.add_argument("algebra")
    p.add_argument("--bands", action="store_true")
    p.add_argument("--sample", type=int, default=0, help="compare a random subsample of this many words")
    p.add_argument("--seed", type=int, default=1234)
    p.set_defaults(handler=cmd_oracle_compare)

    p = sub.add_parser("bands", parents=[common], help="dimension grid for r-dimensional bands")
    p.add_argument("algebra")
    p.add_argument("source", help="band literal")
    p.add_argument("--target", default=None, help="second band literal (default: the first)")
    p.add_argument("--lambdas", nargs="+", default=["1", "2"])
    p.add_argument("--dims", type=int, nargs="+", default=[1, 2, 3])
    p.add_argument("--shifts", type=int, nargs="+", default=[-1, 0, 1])
    p.set_defaults(handler=cmd_bands)

    p = sub.add_parser("ar", parents=[common], help="irreducible maps over a window")
    p.add_argument("algebra")
    p.set_defaults(handler=cmd_ar)

    p = sub.add_parser("discrete", parents=[common], help="the algebra Λ(r,n,m)")
    p.add_argument("r", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--table", action="store_true", help="pairwise dimensions instead of the algebra")
    p.add_argument("--bands", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(handler=cmd_discrete)

    p = sub.add_parser("unfold", parents=[common], help="DOT picture of a word")
    p.add_argument("algebra")
    p.add_argument("word")
    p.set_defaults(handler=cmd_unfold)
    return parser


def run(argv=None, stdout=None):
    """Run one command and return its exit code."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if err.code is not None else EXIT_OK
    config = RunConfig.from_args(args)
    problems = config.problems()
    if problems:
        parser.print_usage(sys.stderr)
        sys.stderr.write("pygentle: error: %s\n" % "; ".join(problems))
        return EXIT_USAGE
    if config.logfile or config.debug:
        init_logging(config.logfile, config.debug)
    previous = fields.active_field()
    try:
        fields.set_field(config.field)
        logger.debug("running %s with field %s" % (args.command, fields.active_field()))
        return args.handler(config, args, stdout)
    except (GentleError, IOError) as err:
        logger.error(str(err))
        sys.stderr.write("error: %s\n" % err)
        return EXIT_DOMAIN
    finally:
        fields.set_field(previous)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
