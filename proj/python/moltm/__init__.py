"""Molecular NAND Turing machine simulator."""

from ._moltm import (
    MoltmError,
    __version__,
    check_equivalence,
    default_assignment_text,
    design,
    nand_oracle,
    render_tape,
    reverse_complement,
    run,
    run_symbolic,
    trace,
    verify_assignment,
)

__all__ = [
    "MoltmError",
    "__version__",
    "check_equivalence",
    "default_assignment_text",
    "design",
    "nand_oracle",
    "render_tape",
    "reverse_complement",
    "run",
    "run_symbolic",
    "trace",
    "verify_assignment",
]
