from pytest import raises

from flatbeltrami.errors import DomainError
from flatbeltrami.plotting import plot_csv, read_columns


def _write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


def test_read_columns_groups_by_radius_fraction(tmp_path):
    path = _write(
        tmp_path / "a.csv",
        "n,radius_fraction,log_ratio\n2,0.25,-inf\n2,0.5,-3.5\n3,0.5,-4.0\n3,0.75,\n",
    )
    groups = read_columns(path, "n", "log_ratio")
    assert groups == {"0.5": [(2.0, -3.5), (3.0, -4.0)]}


def test_read_columns_without_group_column(tmp_path):
    path = _write(tmp_path / "b.csv", "n,a\n2,1.5\n3,1.2\n")
    assert read_columns(path, "n", "a") == {"all": [(2.0, 1.5), (3.0, 1.2)]}


def test_read_columns_errors(tmp_path):
    with raises(DomainError):
        read_columns(_write(tmp_path / "empty.csv", "n,a\n"), "n", "a")
    with raises(DomainError):
        read_columns(_write(tmp_path / "c.csv", "n,a\n1,2\n"), "n", "b")
    with raises(DomainError):
        read_columns(_write(tmp_path / "d.csv", "n,a\n1,nan\n2,inf\n"), "n", "a")


def test_plot_is_deterministic(tmp_path):
    path = _write(tmp_path / "e.csv", "n,radius_fraction,y\n2,0.5,1.0\n2,0.5,3.0\n3,0.5,2.0\n2,0.25,0.5\n3,0.25,0.1\n")
    first, second = tmp_path / "one.svg", tmp_path / "two.svg"
    assert plot_csv(path, "n", "y", first) == 2
    plot_csv(path, "n", "y", second)
    assert first.read_bytes() == second.read_bytes()
    assert b"<svg" in first.read_bytes()


def test_plot_logscale(tmp_path):
    path = _write(tmp_path / "f.csv", "n,y\n2,-100.0\n3,10.0\n")
    out = tmp_path / "g.svg"
    assert plot_csv(path, "n", "y", out, logscale=True) == 1
    assert out.stat().st_size > 0
