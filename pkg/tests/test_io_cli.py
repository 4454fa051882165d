import json
import shutil
import subprocess
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gmet import cli
from gmet.io import (
    dumps,
    format_fraction,
    group_from_dict,
    group_to_dict,
    groups_equal,
    parse_fraction,
    partition_from_dict,
    partition_to_dict,
    perm_group_from_dict,
    perm_group_to_dict,
    weight_from_dict,
    weight_to_dict,
)
from gmet.metrics import homogeneous_weight_zn, weight_from_partition
from gmet.partitions import coarsen, lee_partition
from gmet.spec import build_group
from gmet.symmetry import symmetry_group

from conftest import GROUPS_UP_TO_12


@pytest.mark.parametrize("spec", GROUPS_UP_TO_12)
def test_group_round_trip(groups, spec):
    G = groups(spec)
    H = group_from_dict(json.loads(dumps(group_to_dict(G))))
    assert groups_equal(G, H) and H.label == G.label


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(GROUPS_UP_TO_12), st.randoms(use_true_random=False))
def test_partition_and_weight_round_trip(spec, rnd):
    G = build_group(spec)
    base = lee_partition(G)
    P = coarsen(base, [rnd.randrange(base.size) for _ in range(base.size - 1)])
    shuffled = [list(b) for b in P.blocks]
    rnd.shuffle(shuffled)
    assert partition_from_dict({"blocks": shuffled}, G.order) == P
    assert partition_from_dict(json.loads(dumps(partition_to_dict(P)))) == P
    w = weight_from_partition(G, P)
    assert weight_from_dict(json.loads(dumps(weight_to_dict(w, spec)))) == w
    assert weight_from_dict(json.loads(dumps(weight_to_dict(w)))) == w


def test_fractions_and_perm_groups():
    w = homogeneous_weight_zn(5)
    assert [format_fraction(v) for v in w.values] == ["0", "5/4", "5/4", "5/4", "5/4"]
    assert parse_fraction("-3/6") == Fraction(-1, 2) and parse_fraction(7) == 7
    G = build_group("C6")
    Gamma = symmetry_group(G, lee_partition(G))
    back = perm_group_from_dict(json.loads(dumps(perm_group_to_dict(Gamma))))
    assert back.order == 12 and back.same_group(Gamma)


def test_group_file_rejects_bad_tables(tmp_path):
    with pytest.raises(ValueError):
        group_from_dict({"order": 3, "table": [[0, 1], [1, 0]]})
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"table": [[0, 1], [1, 1]]}))
    assert cli.main(["info", f"file:{path}"]) == cli.EXIT_ERROR


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "S3")
    assert code == 0
    assert json.loads(out) == {"spec": "S3", "order": 6, "abelian": False, "k2": 4, "c": 3, "c2": 3,
                               "k": 4, "kstar": 2, "M": "15", "Mstar": "2", "b": "1/2", "d": "1/2"}
    code, out, _ = run(capsys, "info", "C2^5")
    assert json.loads(out)["M"] == "10293358946226376485095653"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "C2xC2")
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and [r["index"] for r in lines] == [1, 2, 3, 4, 5]
    code, out, _ = run(capsys, "enumerate", "S3", "--kind", "conjugate")
    assert len(out.splitlines()) == 2
    code, out, _ = run(capsys, "enumerate", "C6", "--kind", "metrics", "--limit", "2")
    recs = [json.loads(l) for l in out.splitlines()]
    assert len(recs) == 2 and recs[0]["weight"] == ["0", "2", "2", "2", "2", "2"]
    code, _, err = run(capsys, "enumerate", "C2^5")
    assert code == cli.EXIT_ERROR and "cap" in err


def test_symmetry_command(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    code, out, _ = run(capsys, "symmetry", "C6", "--partition", "lee", "--dot", str(dot))
    rep = json.loads(out)
    assert code == 0 and rep["order"] == "12" and rep["identified"] == "D6"
    assert dot.read_text().startswith("graph G {")
    code, out, _ = run(capsys, "symmetry", "S3", "--partition", "c2")
    rep = json.loads(out)
    assert rep["order"] == "72" and rep["name"] == "S3wrS2"
    code, out, _ = run(capsys, "symmetry", "C4", "--partition", '{"blocks": [[0], [2], [1, 3]]}')
    assert json.loads(out)["order"] == "8"
    code, _, err = run(capsys, "symmetry", "C4", "--partition", '[[0], [1], [2, 3]]')
    assert code == cli.EXIT_ERROR
    code, _, _ = run(capsys, "symmetry", "C4", "--partition", "9")
    assert code == cli.EXIT_ERROR


def test_bell_and_parse_error(capsys):
    assert run(capsys, "bell", "10")[1].strip() == "115975"
    code, _, err = run(capsys, "info", "C2xx")
    assert code == cli.EXIT_ERROR and "offset 3" in err


def test_console_script_is_installed():
    exe = shutil.which("gmet")
    assert exe is not None
    done = subprocess.run([exe, "bell", "5"], capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.strip() == "52"
