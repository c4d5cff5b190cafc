import pytest

from agmbounds import _kernels_py


def _backend_modules():
    mods = [("pure", _kernels_py)]
    try:
        from agmbounds import _kernels_cy

        mods.append(("compiled", _kernels_cy))
    except ImportError:
        pass
    return mods


BACKEND_MODULES = _backend_modules()


@pytest.fixture(params=BACKEND_MODULES, ids=[name for name, _ in BACKEND_MODULES])
def kernel_backend(request):
    """Each importable kernel backend module."""
    return request.param[1]
