import importlib
import logging
import sys
import typing as t

LOG_FORMAT = "%(asctime)-15s [%(name)-26s] %(levelname)-8s: %(message)s"

# Loggers reporting per-column or per-state progress of the counting sweeps.
SWEEP_LOGGERS = (
    "ice20v.icemodel.transfer",
    "ice20v.icemodel.sixvertex",
    "ice20v.tilings.domino",
)


def setup_logging(level=logging.INFO, verbose: bool = False, stream: t.Optional[t.TextIO] = None):
    """
    Log to stderr, in color when colorlog is available.
    """
    stream = stream or sys.stderr
    try:
        importlib.import_module("colorlog")
        setup_logging_colorlog(level=level, stream=stream)
    except ImportError:
        setup_logging_standard(level=level, stream=stream)
    tweak_log_levels(verbose=verbose)


def setup_logging_standard(level=logging.INFO, stream: t.Optional[t.TextIO] = None):
    logging.basicConfig(format=LOG_FORMAT, stream=stream or sys.stderr, level=level)


def setup_logging_colorlog(level=logging.INFO, stream: t.Optional[t.TextIO] = None):
    import colorlog
    from colorlog.escape_codes import escape_codes

    reset = escape_codes["reset"]
    log_format = LOG_FORMAT.replace("%(levelname)-8s:", f"%(log_color)s%(levelname)-8s:{reset}")

    handler = colorlog.StreamHandler(stream or sys.stderr)
    handler.setFormatter(colorlog.ColoredFormatter(log_format))

    logging.basicConfig(level=level, handlers=[handler])


def tweak_log_levels(verbose: bool = False):
    """
    Keep the sweep chatter out of the way unless asked for.
    """
    if not verbose:
        for name in SWEEP_LOGGERS:
            logging.getLogger(name).setLevel(level=logging.INFO)
    # Third-party libraries imported lazily may emit their own records.
    for name in ("sympy", "matplotlib"):
        logging.getLogger(name).setLevel(level=logging.WARNING)
