"""Test command line interface module."""

import json
from typing import Any, Callable, Sequence

import pytest

from circumradii.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from circumradii.geometry.base import Point
from circumradii.tests.conftest import make_points
from circumradii.utils.persistence import load_point_set, read_records

WriteFile = Callable[..., str]


def _run(
    capsys: pytest.CaptureFixture,
    argv: Sequence[str],
) -> tuple[int, list[Any]]:
    code = main(list(argv))
    out = capsys.readouterr().out
    lines = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    return code, lines


def test_check_gp(
    capsys: pytest.CaptureFixture,
    point_set_file: WriteFile,
    mirror_points: list[Point],
) -> None:
    """Test general position check exit codes.

    :param capsys: output capture fixture
    :type capsys: pytest.CaptureFixture
    :param point_set_file: point set file factory
    :type point_set_file: WriteFile
    :param mirror_points: mirror pair instance
    :type mirror_points: list[Point]
    """
    code, lines = _run(capsys, ["check-gp", point_set_file(mirror_points)])
    assert code == EXIT_OK
    assert lines == [{"ok": True, "witness": None, "mode": "paper"}]

    concyclic = make_points([(0, 0), (4, 0), (1, 3), (3, 3)])
    code, lines = _run(capsys, ["check-gp", point_set_file(concyclic, "c.txt")])
    assert code == EXIT_FAILURE
    assert lines[0]["ok"] is False
    assert lines[0]["witness"] == [0, 1, 2, 3]


def test_subsets(
    capsys: pytest.CaptureFixture,
    point_set_file: WriteFile,
    mirror_points: list[Point],
) -> None:
    """Test maximum and greedy subset certificates.

    :param capsys: output capture fixture
    :type capsys: pytest.CaptureFixture
    :param point_set_file: point set file factory
    :type point_set_file: WriteFile
    :param mirror_points: mirror pair instance
    :type mirror_points: list[Point]
    """
    filename = point_set_file(mirror_points)
    code, lines = _run(capsys, ["max-subset", filename])
    assert code == EXIT_OK
    assert lines[0]["n"] == 4
    assert lines[0]["size"] == 3
    assert lines[0]["certificate"]["chosen"] == [0, 1, 2]
    assert lines[0]["certificate"]["optimal"] is True

    code, lines = _run(capsys, ["greedy", filename, "--order", "3,2,1,0"])
    assert code == EXIT_OK
    assert lines[0]["certificate"]["chosen"] == [1, 2, 3]
    assert lines[0]["certificate"]["exclusions"][0]["case"] == "CASE_LOCUS"


@pytest.mark.parametrize(
    "subset, expected_code, addable",
    [
        ("0,1,2", EXIT_OK, []),
        ("2,1,0", EXIT_OK, []),
        ("0,1", EXIT_FAILURE, [2, 3]),
    ],
)
def test_classify(
    capsys: pytest.CaptureFixture,
    point_set_file: WriteFile,
    mirror_points: list[Point],
    subset: str,
    expected_code: int,
    addable: list[int],
) -> None:
    """Test classification of points outside a subset.

    :param capsys: output capture fixture
    :type capsys: pytest.CaptureFixture
    :param point_set_file: point set file factory
    :type point_set_file: WriteFile
    :param mirror_points: mirror pair instance
    :type mirror_points: list[Point]
    :param subset: subset indices
    :type subset: str
    :param expected_code: expected exit code
    :type expected_code: int
    :param addable: expected addable points
    :type addable: list[int]
    """
    filename = point_set_file(mirror_points)
    code, lines = _run(capsys, ["classify", filename, "--subset", subset])
    assert code == expected_code
    assert lines[0]["addable"] == addable
    if not addable:
        assert lines[0]["chosen"] == [0, 1, 2]
        assert [record["case"] for record in lines[0]["exclusions"]] == [
            "CASE_CIRCLE"
        ]


@pytest.mark.parametrize("subset", ["0,5", "0,1,2,3", "0,x", "-1,2"])
def test_classify_usage_errors(
    capsys: pytest.CaptureFixture,
    point_set_file: WriteFile,
    mirror_points: list[Point],
    subset: str,
) -> None:
    """Test invalid subsets exit with a usage error.

    :param capsys: output capture fixture
    :type capsys: pytest.CaptureFixture
    :param point_set_file: point set file factory
    :type point_set_file: WriteFile
    :param mirror_points: mirror pair instance
    :type mirror_points: list[Point]
    :param subset: subset indices
    :type subset: str
    """
    filename = point_set_file(mirror_points)
    if subset in ("0,5", "0,1,2,3"):
        assert main(["classify", filename, "--subset", subset]) == EXIT_USAGE
    else:
        with pytest.raises(SystemExit) as e:
            main(["classify", filename, "--subset", subset])
        assert e.value.code == EXIT_USAGE


def test_locus(
    capsys: pytest.CaptureFixture,
    point_set_file: WriteFile,
    locus_points: list[Point],
) -> None:
    """Test locus curve output.

    :param capsys: output capture fixture
    :type capsys: pytest.CaptureFixture
    :param point_set_file: point set file factory
    :type point_set_file: WriteFile
    :param locus_points: locus instance
    :type locus_points: list[Point]
    """
    filename = point_set_file(locus_points)
    code, lines = _run(capsys, ["locus", filename, "--pairs", "0,1:0,2"])
    assert code == EXIT_OK
    assert lines[0]["pairs"] == [[0, 1], [0, 2]]
    assert lines[0]["is_zero"] is False
    assert 0 < lines[0]["total_degree"] <= 6
    assert "coefficients" not in lines[0]

    code, lines = _run(
        capsys, ["locus", filename, "--pairs", "0,1:0,2", "--emit-coeffs"]
    )
    coefficients = lines[0]["coefficients"]
    assert coefficients == sorted(coefficients)
    assert all(len(term) == 3 and "/" in term[2] for term in coefficients)

    assert main(["locus", filename, "--pairs", "0,1:1,0"]) == EXIT_USAGE
    assert main(["locus", filename, "--pairs", "0,1:0,9"]) == EXIT_USAGE


def test_intersect(
    capsys: pytest.CaptureFixture,
    point_set_file: WriteFile,
    locus_points: list[Point],
) -> None:
    """Test intersection counts of described curves.

    :param capsys: output capture fixture
    :type capsys: pytest.CaptureFixture
    :param point_set_file: point set file factory
    :type point_set_file: WriteFile
    :param locus_points: locus instance
    :type locus_points: list[Point]
    """
    circles = ["intersect", "--lhs", "circle:0,0,1", "--rhs", "circle:1,0,1"]
    code, lines = _run(capsys, circles)
    assert code == EXIT_OK
    assert lines[0]["x_root_count"] == 1
    assert lines[0]["bezout_bound"] == 4

    code, lines = _run(capsys, [*circles, "--shear-seed", "3"])
    assert lines[0]["x_root_count"] == 2

    filename = point_set_file(locus_points)
    code, lines = _run(
        capsys,
        ["intersect", "--lhs", f"locus:{filename}:0,1:0,2", "--rhs", "circle:3,0,1"],
    )
    assert code == EXIT_OK
    assert lines[0]["status"] in ("FINITE", "COMMON_COMPONENT")

    for bad in ("ellipse:1", "circle:0,0,0", "circle:0,0", "locus:0,1:0,2"):
        assert main(["intersect", "--lhs", bad, "--rhs", "circle:0,0,1"]) == (
            EXIT_USAGE
        )


def test_bounds(capsys: pytest.CaptureFixture) -> None:
    """Test bound tables and growth check output.

    :param capsys: output capture fixture
    :type capsys: pytest.CaptureFixture
    """
    code, lines = _run(capsys, ["bounds", "--k", "4", "--k-max", "6"])
    assert code == EXIT_OK
    assert [line["main_n"] for line in lines] == [9, 37, 1871]
    assert lines[0]["erdos_claimed"] == 10

    code, lines = _run(capsys, ["bounds", "--k", "10"])
    assert code == EXIT_OK
    assert lines[-1]["k_max"] == 10

    assert main(["bounds", "--k", "3"]) == EXIT_USAGE


def test_experiment(capsys: pytest.CaptureFixture, tmp_path) -> None:  # type: ignore
    """Test seeded experiment runs and their summaries.

    :param capsys: output capture fixture
    :type capsys: pytest.CaptureFixture
    :param tmp_path: temporary directory
    :type tmp_path: pathlib.Path
    """
    quarantine = str(tmp_path / "quarantine.jsonl")
    argv = [
        "experiment",
        "gap_cases",
        "--trials",
        "2",
        "--n",
        "6",
        "--grid",
        "40",
        "--quarantine",
        quarantine,
    ]
    code, lines = _run(capsys, argv)
    assert code == EXIT_OK
    records, summary = lines[:-1], lines[-1]
    assert [record["trial"] for record in records] == [0, 1]
    assert all(record["n"] == 6 for record in records)
    assert summary["experiment"] == "gap_cases"
    assert summary["num_passed"] == 2
    assert summary["num_failed"] == 0

    output = str(tmp_path / "records.jsonl")
    code, lines = _run(capsys, [*argv, "--output", output])
    assert code == EXIT_OK
    assert [record["payload"] for record in read_records(output)] == [
        record["payload"] for record in records
    ]
    assert len(lines) == 1

    assert main(["experiment", "bezout", "--k", "5"]) == EXIT_USAGE


def test_experiment_argument_errors() -> None:
    """Test unknown experiments are rejected by the parser."""
    with pytest.raises(SystemExit) as e:
        main(["experiment", "unknown"])
    assert e.value.code == EXIT_USAGE


def test_search(capsys: pytest.CaptureFixture, tmp_path) -> None:  # type: ignore
    """Test the search command writes its best instance.

    :param capsys: output capture fixture
    :type capsys: pytest.CaptureFixture
    :param tmp_path: temporary directory
    :type tmp_path: pathlib.Path
    """
    output = str(tmp_path / "best.txt")
    argv = ["search", "--k", "4", "--n", "4", "--iters", "2000", "--output", output]
    code, lines = _run(capsys, argv)
    assert code == EXIT_OK
    assert lines[0]["payload"]["best_size"] == 3
    assert [p.to_string() for p in load_point_set(output)] == lines[0]["payload"][
        "points"
    ]

    assert main(["search", "--k", "4", "--n", "9", "--iters", "1"]) == EXIT_USAGE


@pytest.mark.parametrize(
    "text",
    ["points\n0 0\n", "pointset 1\n0 0\n0 0\n"],
)
def test_bad_point_set_file(tmp_path, text: str) -> None:  # type: ignore
    """Test malformed point set files exit with a usage error.

    :param tmp_path: temporary directory
    :type tmp_path: pathlib.Path
    :param text: file contents
    :type text: str
    """
    filename = tmp_path / "bad.txt"
    filename.write_text(text, encoding="utf-8")
    assert main(["max-subset", str(filename)]) == EXIT_USAGE
    assert main(["check-gp", str(tmp_path / "missing.txt")]) == EXIT_USAGE


def test_parser_errors() -> None:
    """Test missing commands and arguments exit with code 2."""
    for argv in ([], ["bounds"], ["greedy"]):
        with pytest.raises(SystemExit) as e:
            main(argv)
        assert e.value.code == EXIT_USAGE

