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

"""Python bindings for the holc kernel."""

import json

from ._holc import PROTOCOL_VERSION, HolcError, Lattice, Theorem, Theory

__all__ = [
    "PROTOCOL_VERSION",
    "HolcError",
    "Lattice",
    "ProtocolError",
    "Session",
    "Theorem",
    "Theory",
    "check",
    "prove",
]


class ProtocolError(RuntimeError):
    """An error response from the session protocol."""

    def __init__(self, error):
        super().__init__(f"{error['kind']}: {error['message']}")
        self.kind = error["kind"]
        self.message = error["message"]
        self.span = error.get("span")


class Session:
    """In-process client of the JSON-lines session protocol."""

    def __init__(self, theory=None):
        self._server = (theory or Theory())._session()
        self._next = 0

    def raw(self, request):
        return json.loads(self._server.request(json.dumps(request)))

    def call(self, op, session=None, **payload):
        self._next += 1
        request = {"protocol_version": PROTOCOL_VERSION, "op": op, "id": self._next}
        if session is not None:
            request["session"] = session
        if payload:
            request["payload"] = payload
        response = self.raw(request)
        if not response["ok"]:
            raise ProtocolError(response["error"])
        return response


def check(*paths, lattice=None):
    """Checks theory files in order; returns the report lines."""
    theory = Theory(lattice)
    for path in paths:
        theory.run_file(str(path))
    return list(theory.report)


def prove(formula, tactics, label="I", hyps=(), theory=None):
    """Runs `tactics` on a fresh goal; returns the qed result (context, formula, label)."""
    session = Session(theory)
    sid = session.call("start_goal", formula=formula, label=label, hyps=list(hyps))["session"]
    for tactic in tactics:
        session.call("apply", session=sid, tactic=tactic)
    return session.call("qed", session=sid)["result"]
