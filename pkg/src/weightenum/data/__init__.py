"""Checked-in example generator matrices and the Golay orbit table."""

from importlib import resources


def code_path(name: str):
    """Filesystem path of a shipped .code example (e.g. 'hexacode')."""
    if not name.endswith(".code"):
        name += ".code"
    return resources.files(__package__) / "codes" / name


def code_text(name: str) -> str:
    return code_path(name).read_text(encoding="utf-8")


def list_codes():
    base = resources.files(__package__) / "codes"
    return sorted(p.name[:-len(".code")] for p in base.iterdir()
                  if p.name.endswith(".code"))
