"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the
pure-Python twin takes over. AGMBOUNDS_BACKEND={compiled,pure} forces a
choice (forcing "compiled" raises if the extension was never built).
"""

import os

_forced = os.environ.get("AGMBOUNDS_BACKEND")

if _forced == "pure":
    from agmbounds import _kernels_py as kernels

    BACKEND = "pure"
elif _forced == "compiled":
    from agmbounds import _kernels_cy as kernels  # type: ignore[no-redef]

    BACKEND = "compiled"
elif _forced is not None:
    raise RuntimeError(
        f"AGMBOUNDS_BACKEND={_forced!r} not understood (use 'compiled' or 'pure')"
    )
else:
    try:
        from agmbounds import _kernels_cy as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from agmbounds import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "pure"


def available_backends():
    """Names of kernel backends importable in this installation."""
    names = []
    try:
        from agmbounds import _kernels_cy  # noqa: F401

        names.append("compiled")
    except ImportError:
        pass
    names.append("pure")
    return names
