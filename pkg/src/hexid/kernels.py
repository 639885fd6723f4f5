"""Hot loops of the verifier, compiled when available.

``BACKEND`` names the implementation picked at import: ``"cython"`` when
the extension was built, ``"python"`` otherwise.
"""

try:
    from ._kernels import scan_pairs, signatures, splitmix64

    BACKEND = "cython"
except ImportError:  # extension not built
    from ._kernels_py import scan_pairs, signatures, splitmix64

    BACKEND = "python"

__all__ = ["BACKEND", "get_backend", "scan_pairs", "signatures", "splitmix64"]


def get_backend(name=None):
    """Kernel module by name (``"cython"`` or ``"python"``); ``None`` means the default."""
    if name is None:
        name = BACKEND
    if name == "python":
        from . import _kernels_py

        return _kernels_py
    if name == "cython":
        from . import _kernels  # raises ImportError when not built

        return _kernels
    raise ValueError(f"unknown kernel backend {name!r}")
