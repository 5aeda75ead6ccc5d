# Copyright 2026 The holc Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib
import shutil
import socket
import subprocess

import pytest

import holc

THEORIES = pathlib.Path(__file__).resolve().parents[2] / "theories"

PEIRCE = [
    "intro",
    "raa",
    "lift_to I",
    "contra `p`",
    "mp `p --> q`",
    "assumption",
    "intro",
    "false_e",
    "contra `p`",
    "assumption",
    "assumption",
    "assumption",
]


def test_check_corpus():
    report = holc.check(THEORIES / "stdlib.thy", THEORIES / "examples.thy")
    assert "theorem union_comm @ I : |- forall S:'a -> Prop. forall T:'a -> Prop. union S T = union T S" in report
    assert report == holc.check(THEORIES / "stdlib.thy", THEORIES / "examples.thy")


def test_theorem_labels():
    t = holc.Theory()
    t.run_file(str(THEORIES / "stdlib.thy"))
    labels = {n: t.theorem(n).label for n in t.theorem_names()}
    assert labels["cmpl_cmpl"] == "C"
    assert labels["drop_exists"] == "Ch"
    assert labels["lift_true"] == "I"


def test_script_error_carries_kind_and_span():
    with pytest.raises(holc.HolcError) as info:
        holc.check(THEORIES / "peirce_I.thy")
    assert info.value.kind == "TacticFails"
    assert info.value.detail.startswith("raa: NotAbove")
    assert info.value.span[1:] == (5, 10)


def test_prove_peirce_in_session():
    result = holc.prove("((p --> q) --> p) --> p", PEIRCE, label="C")
    assert result == {"context": [], "formula": "((p --> q) --> p) --> p", "label": "C"}
    with pytest.raises(holc.ProtocolError) as info:
        holc.prove("((p --> q) --> p) --> p", PEIRCE, label="I")
    assert info.value.kind == "TacticFails"


def test_session_undo_and_state():
    s = holc.Session()
    sid = s.call("start_goal", formula="p /\\ q --> q /\\ p", label="I")["session"]
    s.call("apply", session=sid, tactic="intro")
    assert s.call("undo", session=sid)["result"]["undo_depth"] == 0
    state = s.call("state", session=sid)["result"]
    assert state["goals"][0]["formula"] == "p /\\ q --> q /\\ p"
    bad = s.raw({"protocol_version": 99, "op": "hello"})
    assert not bad["ok"] and bad["error"]["kind"] == "ProtocolError"


def test_lattice():
    lat = holc.Lattice.four_chain()
    assert lat.members == ["I", "W", "C", "Ch"]
    assert lat.bottom == "I"
    assert lat.join("W", "C") == "C"
    assert lat.leq("I", "Ch") and not lat.leq("C", "W")
    assert lat.scheme_label("Choice") == "Ch"
    diamond = holc.Lattice.load((THEORIES / "diamond.lat").read_text())
    assert diamond.join("C", "Z") == "Top"
    with pytest.raises(holc.HolcError) as info:
        holc.Lattice.load("labels: I A B T\nbottom: I\njoin: A T = T\njoin: B T = T\n")
    assert info.value.kind == "NotALattice"


def test_export_certify_unwind():
    t = holc.Theory()
    t.run_file(str(THEORIES / "peirce.thy"))
    text = t.export_proof("peirce")
    assert str(t.certify(text)) == "|- ((p --> q) --> p) --> p @ C"
    unwound = t.unwind("peirce")
    assert unwound.label == "I"
    assert unwound.formula.startswith("(forall")
    with pytest.raises(holc.HolcError):
        t.certify(text.replace("label C", "label I"))


def test_parse_round_trip():
    t = holc.Theory()
    assert t.parse("\\x:Prop. x /\\ y") == "\\x:Prop. x /\\ y"
    with pytest.raises(holc.HolcError) as info:
        t.parse("(p")
    assert info.value.kind == "SyntaxError"


def _holc_binary():
    return os.environ.get("HOLC_BIN") or shutil.which("holc")


@pytest.mark.skipif(_holc_binary() is None, reason="holc binary not available")
def test_tcp_server():
    proc = subprocess.Popen(
        [_holc_binary(), "serve", "--port", "0"],
        stdout=subprocess.PIPE,
        text=True,
    )
    try:
        line = proc.stdout.readline()
        assert line.startswith("listening on 127.0.0.1:")
        port = int(line.rsplit(":", 1)[1])
        with socket.create_connection(("127.0.0.1", port), timeout=10) as conn:
            stream = conn.makefile("rw")
            for req in (
                {"protocol_version": 1, "op": "hello", "id": 1},
                {"protocol_version": 1, "op": "start_goal", "session": "t",
                 "payload": {"formula": "p --> p", "label": "I"}},
                {"protocol_version": 1, "op": "apply", "session": "t",
                 "payload": {"tactic": "intro; assumption"}},
                {"protocol_version": 1, "op": "qed", "session": "t"},
            ):
                stream.write(json.dumps(req) + "\n")
                stream.flush()
                resp = json.loads(stream.readline())
                assert resp["ok"], resp
            assert resp["result"]["label"] == "I"
    finally:
        proc.terminate()
        proc.wait(timeout=10)
