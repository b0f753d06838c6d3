import pytest

from designs.analysis import PermSet
from designs.constructions import affine_group, paper_example_n5
from designs.errors import PermSetError
from designs.permutations import identity, parse_one_line
from utils.permset_store import (
    format_latin_square,
    format_permset,
    load_latin_square,
    load_permset,
    store_permset,
)


def write(tmp_path, text: str):
    path = tmp_path / "set.perms"
    path.write_text(text, encoding="utf-8")
    return path


def test_bundled_files(data_dir):
    assert load_permset(data_dir / "paper_n5.perms") == paper_example_n5()
    assert load_permset(data_dir / "affine5.perms") == affine_group(5)
    assert load_latin_square(data_dir / "z3_latin.txt") == [[1, 2, 3], [2, 3, 1], [3, 1, 2]]


def test_store_and_load(tmp_path):
    path = tmp_path / "affine7.perms"
    store_permset(affine_group(7), path, comment="affine group over GF(7)")
    assert path.read_text(encoding="utf-8").startswith("# affine group over GF(7)\nn=7\n")
    assert load_permset(path) == affine_group(7)


def test_wide_permutations_use_spaces(tmp_path):
    D = PermSet.of([identity(10), parse_one_line("2 1 3 4 5 6 7 8 9 10", 10)])
    text = format_permset(D)
    assert "1 2 3 4 5 6 7 8 9 10" in text
    assert load_permset(write(tmp_path, text)) == D


def test_comments_and_blank_lines(tmp_path):
    path = write(tmp_path, "# header\n\nn=3\n123\n\n# middle\n231\n312\n")
    assert len(load_permset(path)) == 3


def test_missing_header(tmp_path):
    with pytest.raises(PermSetError, match="n=<degree>"):
        load_permset(write(tmp_path, "123\n231\n"))


def test_empty_body(tmp_path):
    with pytest.raises(PermSetError, match="nonempty"):
        load_permset(write(tmp_path, "n=3\n# nothing\n"))


def test_duplicate_reports_both_lines(tmp_path):
    with pytest.raises(PermSetError, match=r":4: duplicates forbidden \(same as line 2\)"):
        load_permset(write(tmp_path, "n=3\n123\n# c\n123\n"))


def test_malformed_line_reports_its_number(tmp_path):
    with pytest.raises(PermSetError, match=":3:"):
        load_permset(write(tmp_path, "n=3\n123\n1x3\n"))
    with pytest.raises(PermSetError, match=":2:"):
        load_permset(write(tmp_path, "n=3\n1 2 4\n"))


def test_latin_square_text(tmp_path):
    text = format_latin_square([[1, 2], [2, 1]])
    assert text == "1 2\n2 1\n"
    path = tmp_path / "sq.txt"
    path.write_text("1,2\n2,1\n", encoding="utf-8")
    assert load_latin_square(path) == [[1, 2], [2, 1]]
    path.write_text("1 a\n", encoding="utf-8")
    with pytest.raises(PermSetError):
        load_latin_square(path)
