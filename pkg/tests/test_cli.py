import json

import pytest

from l2alex.cli import cli, compute, run_command
from l2alex.dsl.printer import cache_key
from l2alex.links.builder import build_link
from l2alex.models.link import TorusLink


def invoke(runner, *args):
    return runner.invoke(cli, list(args))


def test_eval_with_coefficients(runner):
    result = invoke(runner, "eval", "torus(3,4)", "--coeffs", "1", "--json", "--no-cache")
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload["evaluation"] == 5
    assert payload["torsion"]["text"] == "max(1,t)^(5|n1|)"
    assert payload["torsion"]["norm_claim"]
    assert payload["link"]["components"] == 1
    assert payload["trace"]["rule"] == "specialize"


def test_eval_uses_inline_coefficients(runner):
    result = invoke(runner, "eval", "torus(4,2) @ (2,-1)", "--json", "--no-cache")
    assert json.loads(result.stdout)["evaluation"] == 1
    overridden = invoke(runner, "eval", "torus(4,2) @ (2,-1)", "--coeffs", "1,1", "--json", "--no-cache")
    assert json.loads(overridden.stdout)["evaluation"] == 2


def test_eval_text(runner):
    result = invoke(runner, "eval", "torus(2,3)", "--no-cache")
    assert result.exit_code == 0
    assert "link: torus(2,3) (1 components)" in result.output
    assert "exponent: |n1|" in result.output


def test_second_eval_is_served_from_the_cache(runner, cache_path):
    first = json.loads(invoke(runner, "eval", "keychain(2)", "--json").stdout)
    assert first["trace"] is not None
    assert cache_path.exists()
    second = json.loads(invoke(runner, "eval", "keychain(2)", "--json").stdout)
    assert second["trace"] is None
    assert second["torsion"] == first["torsion"]


@pytest.mark.parametrize("extra", [["--json"], ["--format", "json"]])
def test_ball_json(runner, extra):
    result = invoke(runner, "ball", "torus(4,2)", *extra)
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"vertices": [[1, 1], [-1, -1]]}


def test_ball_text(runner):
    result = invoke(runner, "ball", "torus(4,2)")
    assert result.output.splitlines() == ["1 1", "-1 -1"]


def test_norm_json(runner):
    result = invoke(runner, "norm", "torus(4,2)", "--json")
    payload = json.loads(result.stdout)
    assert payload["is_seminorm"]
    assert payload["degenerate_directions"] == [[1, -1]]
    assert payload["text"] == "|n1+n2|"


@pytest.mark.parametrize(
    "args, status, code",
    [
        (["eval", "torus(2;3)"], 2, "syntax_error"),
        (["eval", "torus_in_solid(2,2,4)"], 1, "invalid_parameters"),
        (["eval", "hopf", "--coeffs", "1"], 1, "dimension_mismatch"),
        (["ball", "unknot"], 1, "not_a_seminorm"),
        (["ball", "delete(keychain(2),3)"], 1, "zero_torsion"),
        (["norm", "delete(keychain(2),3)"], 1, "zero_torsion"),
    ],
)
def test_errors_as_json(runner, args, status, code):
    result = invoke(runner, *args, "--json")
    assert result.exit_code == status
    assert json.loads(result.stdout)["error"]["code"] == code


def test_syntax_error_position(runner):
    result = invoke(runner, "eval", "torus(2;3)", "--json")
    error = json.loads(result.stdout)["error"]
    assert (error["line"], error["column"]) == (1, 8)


def test_error_text_goes_to_stderr(runner):
    result = invoke(runner, "eval", "knot(1)")
    assert result.exit_code == 2
    assert "Error: unknown constructor 'knot'" in result.output


@pytest.mark.parametrize("args", [["eval"], ["eval", "hopf", "--coeffs", "1,x"], ["check", "--suite", "nope"]])
def test_usage_errors(runner, args):
    assert invoke(runner, *args).exit_code == 2


def test_explain(runner):
    result = invoke(runner, "explain", "cable(torus(2,3),1,1,2,3)")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].startswith("[cabling]")
    assert any(line.startswith("  [torus_link]") for line in lines)
    assert lines[-1] == "replay: ok"


def test_explain_json(runner):
    payload = json.loads(invoke(runner, "explain", "hopf", "--json").stdout)
    assert payload["replayed"]
    assert payload["trace"]["rule"] == "torus_link"


def test_check_subset(runner):
    result = invoke(
        runner, "check", "--grid", "1", "--cases", "5", "--suite", "torus_knots", "--suite", "surgery"
    )
    assert result.exit_code == 0, result.output
    assert "PASS torus_knots" in result.output
    assert "PASS surgery" in result.output


def test_check_rejects_bad_config(runner):
    assert invoke(runner, "check", "--workers", "0").exit_code == 2


def test_compute_stores_the_symbolic_trace(cache):
    obj = build_link(TorusLink(e=1, p=2, q=3))
    result = compute(obj, cache=cache)
    entry = cache.lookup(cache_key(obj.spec))
    assert entry.trace_digest == result.trace.digest()


def test_run_command_statuses():
    assert run_command(["eval", "hopf", "--no-cache"]) == 0
    assert run_command(["eval", "torus(2;3)"]) == 2
    assert run_command(["eval"]) == 2


STEP_KEYS = {"rule", "params", "nvars", "result", "assumptions", "warnings", "children"}


def _check_step(step):
    assert set(step) == STEP_KEYS
    assert isinstance(step["params"], dict)
    assert isinstance(step["nvars"], int)
    if step["result"] is not None:
        assert set(step["result"]) == {"zero", "exponent"}
    for child in step["children"]:
        _check_step(child)


def test_eval_json_schema(runner):
    expr = "sum(keychain(2),3,torus(2,3),1)"
    result = invoke(runner, "eval", expr, "--coeffs", "1,-1,2", "--json", "--no-cache")
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert set(payload) == {"link", "torsion", "evaluation", "warnings", "trace"}
    assert set(payload["link"]) == {"expr", "components", "linking", "warnings"}
    assert payload["link"]["components"] == 3
    assert len(payload["link"]["linking"]) == 3
    torsion = payload["torsion"]
    assert set(torsion) == {"zero", "exponent", "text", "norm_claim"}
    assert not torsion["zero"]
    exponent = torsion["exponent"]
    assert set(exponent) == {"nvars", "constant", "terms"}
    assert exponent["nvars"] == 3
    assert all(set(term) == {"coeff", "form"} for term in exponent["terms"])
    assert isinstance(payload["warnings"], list)
    _check_step(payload["trace"])
    assert payload["trace"]["children"][0]["rule"] == "connected_sum"
