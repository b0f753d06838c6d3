import os
from pathlib import Path
from typing import Union

from designs.analysis import PermSet
from designs.errors import PermSetError, PermutationError
from designs.permutations import format_one_line, parse_one_line

PathLike = Union[str, os.PathLike]


def _content_lines(path: PathLike):
    with open(path, "r", encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if line and not line.startswith("#"):
                yield lineno, line


def load_permset(path: PathLike) -> PermSet:
    """Read `n=<degree>` then one permutation per line; `#` lines are comments."""
    lines = _content_lines(path)
    header = next(lines, None)
    if header is None or not header[1].replace(" ", "").startswith("n="):
        raise PermSetError(f"{path}: first non-comment line must be n=<degree>")
    lineno, text = header
    try:
        n = int(text.replace(" ", "")[2:])
    except ValueError as e:
        raise PermSetError(f"{path}:{lineno}: bad degree in {text!r}") from e

    perms, seen = [], {}
    for lineno, text in lines:
        try:
            sigma = parse_one_line(text, n)
        except PermutationError as e:
            raise PermSetError(f"{path}:{lineno}: {e}") from e
        if sigma in seen:
            raise PermSetError(f"{path}:{lineno}: duplicates forbidden (same as line {seen[sigma]})")
        seen[sigma] = lineno
        perms.append(sigma)
    if not perms:
        raise PermSetError(f"{path}: nonempty set required")
    return PermSet(n, tuple(perms))


def format_permset(D: PermSet, comment: str = "") -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"n={D.n}")
    lines.extend(format_one_line(p) for p in D)
    return "\n".join(lines) + "\n"


def store_permset(D: PermSet, path: PathLike, comment: str = "") -> None:
    Path(path).write_text(format_permset(D, comment), encoding="utf-8")


def load_latin_square(path: PathLike) -> list[list[int]]:
    rows = []
    for lineno, text in _content_lines(path):
        try:
            rows.append([int(tok) for tok in text.replace(",", " ").split()])
        except ValueError as e:
            raise PermSetError(f"{path}:{lineno}: Latin square rows hold integers only") from e
    return rows


def format_latin_square(rows: list[list[int]]) -> str:
    width = len(str(len(rows)))
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in rows) + "\n"
