"""
Command-line runs, exit statuses and report emission.
"""

import io
import json
import math

import pytest

import cli.runner as runner
from cli import OutputFormat, RunConfig, emit, load_report, render, run
from cli.models import BudgetReport
from constants import PUBLISHED_CONSTANTS, Family
from main import main
from optimize import SearchResult, SearchRow
from scanner import CertificationReport, GramBlock
from siegel import growth_check
from utils.errors import ParameterError
from utils.logging_config import reset_logging

ZETA_NEW = PUBLISHED_CONSTANTS["zeta-new"].constants


@pytest.fixture(autouse=True)
def detached_logging():
    # main() binds a console handler to the captured stderr of the running test
    yield
    reset_logging()


def last_json(text: str) -> dict:
    lines = [line for line in text.splitlines() if line.strip()]
    return json.loads(lines[-1])


def search_result() -> SearchResult:
    rows = [
        SearchRow(index=0, c=1.1, d=0.74, a=2.07, b=0.0578, objective=3.6805),
        SearchRow(index=1, c=1.1, d=0.75, a=2.0666, b=0.0585, objective=3.6812),
    ]
    return SearchResult(family=Family.ZETA, best_params=rows[0].params, best_value=3.6805, table=rows)


def certification_report() -> CertificationReport:
    blocks = [
        GramBlock(start_index=300, length=1, counts=[1], rosser_ok=True),
        GramBlock(start_index=301, length=2, counts=[0, 2], rosser_ok=True),
    ]
    return CertificationReport(
        n=300, p=303, g_n=550.2, g_p=554.9, blocks_used=2, required_blocks=1,
        certified=True, lower_count=304, upper_bound=304, exact_count=304,
        range_count=3, constants_used=ZETA_NEW, blocks=blocks,
    )


# ---------------------------------------------------------------------------
# main()
# ---------------------------------------------------------------------------

def test_constants_command(capsys):
    code = main(["constants", "--family", "zeta", "--c", "1.1", "--d", "0.75", "--format", "json"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out["schema"] == "turing-bounds/constants/v1"
    assert out["a"] == pytest.approx(2.0666, abs=0.003)
    assert out["b"] == pytest.approx(0.0585, abs=0.0002)
    assert out["t0"] == pytest.approx(168 * math.pi)


@pytest.mark.parametrize("height", [["--gp", "6.283185e12"], ["--gp-over-2pi", "1e12"]])
def test_blocks_required_command(capsys, height):
    code = main(["blocks-required", "--family", "zeta", "--a", "2.067", "--b", "0.0585",
                 *height, "--format", "json"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out["required_blocks"] == 6


def test_constants_outside_box(capsys):
    code = main(["constants", "--family", "zeta", "--c", "0.9", "--d", "0.75"])
    lines = [line for line in capsys.readouterr().err.splitlines() if line.strip()]
    assert len(lines) == 1
    err = json.loads(lines[0])
    assert code == 2
    assert err["error"] == "DomainError"
    assert err["field"] == "c"
    assert err["exit_code"] == 2


@pytest.mark.parametrize("argv", [
    ["budget", "--family", "zeta", "--a", "2", "--b", "0.06", "--gp", "1e6", "--c", "1.1"],
    ["budget", "--family", "zeta", "--a", "2"],
    ["growth-check", "--family", "dirichlet", "--t-lo", "5", "--t-hi", "50", "--samples", "10"],
    ["constants", "--c", "1.1", "--d", "0.75", "--lattice", "stage2"],
    ["blocks-required", "--a", "2", "--b", "0.06", "--gp", "1e6", "--gp-over-2pi", "1e6"],
    ["budget", "--family", "dirichlet", "--a", "1.8", "--b", "0.12", "--Q", "2.5", "--t2", "100"],
    ["constants", "--c", "abc", "--d", "0.75"],
    ["optimize", "--gp", "1e12", "--lattice", "refine"],
])
def test_invalid_arguments_exit_2(capsys, argv):
    assert main(argv) == 2
    assert last_json(capsys.readouterr().err)["exit_code"] == 2


def test_threshold_error_exit_2(capsys):
    assert main(["certify", "--n", "100", "--p", "120"]) == 2
    assert last_json(capsys.readouterr().err)["error"] == "ThresholdError"


def test_budget_command(capsys):
    code = main(["budget", "--family", "dirichlet", "--a", "1.8397", "--b", "0.1242",
                 "--Q", "100", "--t2", "2500", "--format", "json"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out["value"] == pytest.approx(5.32, abs=0.03)
    assert out["Q"] == 100


def test_dedekind_budget_command(capsys):
    code = main(["budget", "--family", "dedekind", "--a", "0.2627", "--b", "1.8392", "--g", "0.122",
                 "--degree", "4", "--abs-discriminant", "1000", "--t2", "80", "--format", "json"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out["value"] == pytest.approx(26.44, abs=0.3)
    assert out["shape"]["r1"] == 4


def test_growth_check_command(capsys):
    code = main(["growth-check", "--t-lo", "5", "--t-hi", "200", "--samples", "500", "--format", "csv"])
    lines = capsys.readouterr().out.splitlines()
    assert code == 0
    assert lines[0] == "t_lo,t_hi,samples,max_ratio,argmax,bound,passed"
    assert lines[1].endswith(",true")


def test_output_file(tmp_path):
    target = tmp_path / "constants.json"
    code = main(["constants", "--c", "1.25", "--d", "1", "--format", "json", "--output", str(target)])
    assert code == 0
    report = load_report(target.read_text(encoding="utf-8"))
    assert report.b == pytest.approx(0.0914, abs=0.0003)


def test_unwritable_output_exit_5(tmp_path, capsys):
    target = tmp_path / "missing" / "report.json"
    code = main(["blocks-required", "--a", "2.067", "--b", "0.0585", "--gp", "1e6", "--output", str(target)])
    err = last_json(capsys.readouterr().err)
    assert code == 5
    assert err["error"] == "ReportIOError"


# ---------------------------------------------------------------------------
# run()
# ---------------------------------------------------------------------------

def test_run_writes_to_given_streams():
    out, err = io.StringIO(), io.StringIO()
    config = RunConfig(command="blocks-required", parameters={"a": "1.7", "b": "0.114", "gp": "6.283185307e12"},
                       output_format="json")
    assert run(config, stdout=out, stderr=err) == 0
    assert json.loads(out.getvalue())["required_blocks"] == 8
    assert err.getvalue() == ""


def test_run_uncertified_exit_4(monkeypatch):
    report = certification_report().model_copy(
        update={"certified": False, "exact_count": None, "lower_count": 300, "required_blocks": 5}
    )
    monkeypatch.setattr(runner, "certify", lambda n, p, consts: report)
    config = RunConfig(command="certify", parameters={"n": 300, "p": 303})
    assert run(config, stdout=io.StringIO(), stderr=io.StringIO()) == 4


def test_run_config_parses_scientific_notation():
    config = RunConfig(command="optimize", family="dirichlet", parameters={"Q": "1e2", "t2": "2.5e3"})
    assert config.parameters == {"Q": 100, "t2": 2500.0}
    with pytest.raises(ParameterError):
        RunConfig(command="optimize", family="dirichlet", parameters={"Q": "1.5", "t2": "100"})


# ---------------------------------------------------------------------------
# emit()
# ---------------------------------------------------------------------------

def test_search_result_csv_header():
    text = render(search_result(), OutputFormat.CSV)
    lines = text.splitlines()
    assert lines[0] == "c,d,a,b,objective"
    assert lines[1] == "1.1,0.74,2.07,0.0578,3.6805"


def test_csv_digits():
    text = render(search_result(), OutputFormat.CSV, digits=2)
    assert text.splitlines()[1] == "1.1,0.74,2.1,0.058,3.7"


def test_certification_json_echoes_constants():
    payload = json.loads(render(certification_report(), OutputFormat.JSON))
    assert payload["schema"] == "turing-bounds/certification/v1"
    assert payload["constants_used"]["a"] == 2.0666
    assert payload["blocks"][1]["counts"] == [0, 2]


def test_certification_text_and_csv():
    text = render(certification_report(), OutputFormat.TEXT)
    assert "certified" in text and "N(g_p)" in text
    csv_lines = render(certification_report(), OutputFormat.CSV).splitlines()
    assert csv_lines[0] == "start_index,length,counts,rosser_ok"
    assert csv_lines[2] == "301,2,0 2,true"


def test_emit_is_byte_identical():
    first, second = io.StringIO(), io.StringIO()
    n1 = emit(search_result(), OutputFormat.TEXT, stream=first)
    n2 = emit(search_result(), OutputFormat.TEXT, stream=second)
    assert first.getvalue() == second.getvalue()
    assert n1 == n2 == len(first.getvalue().encode("utf-8"))


@pytest.mark.parametrize("report", [
    ZETA_NEW,
    search_result(),
    certification_report(),
    BudgetReport(constants=ZETA_NEW, value=3.68, log_term=27.63, g_p=6.283185307e12),
])
def test_json_round_trip(report):
    assert load_report(render(report, OutputFormat.JSON)) == report


def test_json_round_trip_growth():
    report = growth_check(5.0, 100.0, 50)
    assert load_report(render(report, OutputFormat.JSON)) == report


@pytest.mark.parametrize("text", ["not json", "{}", '{"schema": "turing-bounds/unknown/v1"}'])
def test_load_report_rejects(text):
    with pytest.raises(ParameterError):
        load_report(text)
