import io
import json
from pathlib import Path

import pytest

from lpc.cli import run
from lpc.kernel import check, parse_derivations

PROOFS = Path(__file__).resolve().parents[1] / "proofs"


def lpc(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_check_shipped_files():
    for path in sorted(PROOFS.glob("*.lpc")):
        code, out, _ = lpc("check", path)
        assert code == 0, path
        assert set(out.split()) == {"ok"}


def test_check_no_cut_rejects_cuts():
    code, out, _ = lpc("check", "--no-cut", PROOFS / "cut1.lpc")
    assert code == 1
    assert "cut-forbidden" in out


def test_check_reports_cause_and_path():
    bad = "(rule Ax (|- (1) (0)) (principal (L 0) (R 0)))"
    code, out, _ = lpc("check", bad)
    assert code == 1 and out.startswith("error at root [Ax]")
    code, out, _ = lpc("--format", "structured", "check", bad)
    rec = json.loads(out)
    assert rec["ok"] is False and rec["cause"] == "principal-mismatch" and rec["path"] == []


def test_elim_emits_cut_free_proofs(tmp_path):
    target = tmp_path / "out.lpc"
    code, out, _ = lpc("elim", PROOFS / "cuts.lpc", "--emit", target)
    assert code == 0 and out.startswith("emitted\t9\t")
    ds = parse_derivations(target.read_text())
    assert len(ds) == 9 and all(check(d, allow_cut=False).ok for d in ds)
    assert lpc("check", "--no-cut", target)[0] == 0


def test_structured_elim_carries_the_text():
    code, out, _ = lpc("--format", "structured", "elim", PROOFS / "cut1.lpc")
    rec = json.loads(out)
    assert code == 0 and rec["text"].startswith("(rule OneR")


def test_elim_trace_is_decreasing():
    code, out, _ = lpc("elim", "--trace", PROOFS / "cut1.lpc")
    assert code == 0
    assert "decreasing\t0\tTrue" in out.splitlines()


def test_dual_of_proposition():
    assert lpc("dual", "(tensor 1 (F! (! 1)))") == (0, "dual\t(par B (F? (? B)))\n", "")
    code, out, _ = lpc("--format", "structured", "dual", "(& 1 T)")
    rec = json.loads(out)
    assert code == 0 and rec["dual"] == "(+ B 0)" and rec["neg"] == "(par (+ B 0) 0)"
    assert json.loads(lpc("--format", "structured", "dual", "(! 1)")[1])["mode"] == "P"


def test_dual_moves_a_formula():
    code, out, _ = lpc("dual", "(rule OneR (|- () (1)) (principal (R 0)))")
    assert code == 0
    d, = parse_derivations(out)
    assert check(d, allow_cut=False).ok
    assert d.rule.value == "BotL" and d.conclusion.right == ()


def test_search_found_and_exhausted():
    code, out, _ = lpc("search", "(|- () ((tensor 1 1)))", "--depth", 4)
    assert code == 0 and out.startswith("(rule TensorR")
    code, out, _ = lpc("search", "(|- () (0))", "--depth", 8, "--contractions", 2)
    assert code == 1 and out == "exhausted\n"


def test_interp_prints_morphisms():
    code, out, _ = lpc("interp", PROOFS / "ax.lpc", "--model", "rel")
    assert code == 0 and out == "0\tL\t1->1\t[[1]]\n"
    code, out, _ = lpc("--format", "structured", "interp", PROOFS / "cut1.lpc", "--model", "finvect",
                       "--params", "q=3")
    rec = json.loads(out)
    assert rec["category"] == "L" and rec["dom"] == 1 and rec["cod"] == 1


def test_verify_model_filtered():
    code, out, _ = lpc("verify-model", "--model", "rel", "--max-size", 2, "--laws", "unit,snake")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "pass"
    assert all(l.split("\t")[0] in ("unit", "snake") for l in lines[:-1])


def test_corpus_summary():
    code, out, _ = lpc("corpus", "--size", 2, "--depth", 4)
    assert code == 0
    assert out.splitlines()[-1].endswith("displacement_violations=0")


def test_usage_errors_exit_2():
    assert lpc("check", "(rule Ax (|- (1) (1))")[0] == 2
    assert lpc("interp", PROOFS / "ax.lpc", "--model", "nope")[0] == 2
    assert lpc("search", "(tensor 1 1)", "--depth", 2)[0] == 2
    assert lpc("verify-model", "--model", "rel", "--max-size", 9)[0] == 2
    assert lpc("interp", PROOFS / "ax.lpc", "--model", "rel", "--params", "max_size")[0] == 2
    code, _, err = lpc("check", "(foo 1)")
    assert code == 2 and err.startswith("lpc check:")


@pytest.mark.parametrize("argv", [
    ("corpus", "--size", 2, "--depth", 4),
    ("elim", "--trace", PROOFS / "cuts.lpc"),
    ("--format", "structured", "verify-model", "--model", "finvect", "--max-size", 1),
])
def test_output_is_deterministic(argv):
    assert lpc(*argv) == lpc(*argv)
