"""Python access to the nonlocal perimeter library.

Polyominoes are passed as lists of ``(x, y)`` cell pairs; ``parse`` turns the
text format (pairs or a ``#``/``.`` grid) into that form.
"""

from ._nlper import (
    NlperError,
    argmin,
    classical_perimeter,
    classify,
    count_fixed,
    critical_length,
    crossover,
    d2f,
    hurwitz,
    landscape,
    minimal_shapes,
    parse,
    perimeter,
    reduce,
    to_grid,
    torus,
    verify_theorem,
)

__all__ = [
    "NlperError",
    "argmin",
    "classical_perimeter",
    "classify",
    "count_fixed",
    "critical_length",
    "crossover",
    "d2f",
    "hurwitz",
    "landscape",
    "minimal_shapes",
    "parse",
    "perimeter",
    "reduce",
    "to_grid",
    "torus",
    "verify_theorem",
]
