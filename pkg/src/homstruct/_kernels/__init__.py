"""Search kernel selection: compiled extension when built, pure Python
fallback otherwise. Both expose the same API and identical streams."""

from . import pykern

try:
    from . import _ckern
except ImportError:  # extension not built; fall back
    _ckern = None


def available() -> tuple:
    names = ["python"]
    if _ckern is not None:
        names.insert(0, "compiled")
    return tuple(names)


def get_kernel(name: str = "auto"):
    if name == "auto":
        return _ckern if _ckern is not None else pykern
    if name == "python":
        return pykern
    if name == "compiled":
        if _ckern is None:
            raise RuntimeError("compiled kernel not built; reinstall with a "
                               "C compiler or use kernel='python'")
        return _ckern
    raise ValueError(f"unknown kernel {name!r}")
