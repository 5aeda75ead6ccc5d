/* Copyright 2026 The holc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holc/derived.h"
#include "holc/error.h"
#include "holc/lattice.h"
#include "holc/parse.h"
#include "holc/print.h"
#include "holc/proof_io.h"
#include "holc/script.h"
#include "holc/session.h"

namespace py = pybind11;
using namespace holc;

namespace {

struct Theorem {
  std::string name;
  std::vector<std::string> context;
  std::string formula;
  std::string label;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < context.size(); ++i) s += (i ? ", " : "") + context[i];
    return s + (s.empty() ? "|- " : " |- ") + formula + " @ " + label;
  }
};

Theorem describe(const TheoryEnv& env, const std::string& name, const Thm& th) {
  std::vector<Term> all = th.context();
  all.push_back(th.formula());
  FreeScope scope = free_scope(all);
  Theorem out{name, {}, print_term(env, th.formula(), scope), env.lattice().name(th.label())};
  for (const auto& h : th.context()) out.context.push_back(print_term(env, h, scope));
  return out;
}

class Lattice {
 public:
  explicit Lattice(std::shared_ptr<const TaintLattice> lat) : lat_(std::move(lat)) {}
  static Lattice load(const std::string& text) {
    return Lattice(std::make_shared<const TaintLattice>(TaintLattice::load(text)));
  }

  std::vector<std::string> members() const {
    std::vector<std::string> out;
    for (Label l : lat_->members()) out.push_back(lat_->name(l));
    return out;
  }
  std::string bottom() const { return lat_->name(lat_->bottom()); }
  bool leq(const std::string& a, const std::string& b) const {
    return lat_->leq(lat_->label(a), lat_->label(b));
  }
  std::string join(const std::string& a, const std::string& b) const {
    return lat_->name(lat_->join(lat_->label(a), lat_->label(b)));
  }
  std::vector<std::pair<std::string, std::string>> hasse() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [a, b] : lat_->hasse_edges()) out.emplace_back(lat_->name(a), lat_->name(b));
    return out;
  }
  std::optional<std::string> scheme(const std::string& s) const {
    auto l = lat_->scheme_label(s);
    if (!l) return std::nullopt;
    return lat_->name(*l);
  }
  const std::shared_ptr<const TaintLattice>& ptr() const { return lat_; }

 private:
  std::shared_ptr<const TaintLattice> lat_;
};

class Session {
 public:
  explicit Session(const TheoryEnv& env)
      : server_(std::make_shared<const TheoryEnv>(env)) {}
  std::string request(const std::string& line) {
    py::gil_scoped_release release;
    return server_.handle(line);
  }

 private:
  SessionServer server_;
};

class Theory {
 public:
  explicit Theory(std::optional<Lattice> lattice)
      : session_(lattice ? TheoryEnv(lattice->ptr()) : TheoryEnv()) {}

  void run_text(const std::string& text, const std::string& file, const std::string& base_dir) {
    ScriptOptions opts;
    opts.base_dir = base_dir;
    session_.run_text(text, file, opts);
  }
  void run_file(const std::string& path) { session_.run_file(path); }
  const std::vector<std::string>& report() const { return session_.report(); }
  Lattice lattice() const { return Lattice(env().lattice_ptr()); }

  std::vector<std::string> theorem_names() const {
    std::vector<std::string> out;
    for (const auto& [n, _] : env().theorems()) out.push_back(n);
    return out;
  }
  Theorem theorem(const std::string& name) const { return describe(env(), name, thm(name)); }
  Theorem unwind(const std::string& name) const {
    return describe(env(), name, unwind_classical(env(), thm(name)));
  }
  std::string export_proof(const std::string& name) const {
    return holc::export_proof(env(), thm(name));
  }
  Theorem certify(const std::string& text) const {
    return describe(env(), "", holc::certify(env(), text));
  }
  std::string parse(const std::string& text) const {
    Term t = parse_term(env(), text);
    return print_term(env(), t, free_scope({t}));
  }
  std::unique_ptr<Session> session() const { return std::make_unique<Session>(env()); }

 private:
  const TheoryEnv& env() const { return session_.env(); }
  const Thm& thm(const std::string& name) const {
    const Thm* th = env().theorem(name);
    if (!th) throw py::key_error(name);
    return *th;
  }

  ScriptSession session_;
};

}  // namespace

PYBIND11_MODULE(_holc, m) {
  m.doc() = "Taint-labelled HOL kernel";
  m.attr("PROTOCOL_VERSION") = kProtocolVersion;

  static py::handle holc_error =
      py::exception<Error>(m, "HolcError", PyExc_RuntimeError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::gil_scoped_acquire gil;
      py::object exc = py::reinterpret_borrow<py::object>(holc_error)(e.what());
      exc.attr("kind") = std::string(error_kind_name(e.kind()));
      exc.attr("detail") = e.detail();
      if (e.span())
        exc.attr("span") = py::make_tuple(e.span()->file, e.span()->start_line,
                                          e.span()->start_col);
      else
        exc.attr("span") = py::none();
      PyErr_SetObject(holc_error.ptr(), exc.ptr());
    }
  });

  py::class_<Theorem>(m, "Theorem")
      .def_readonly("name", &Theorem::name)
      .def_readonly("context", &Theorem::context)
      .def_readonly("formula", &Theorem::formula)
      .def_readonly("label", &Theorem::label)
      .def("__str__", &Theorem::str)
      .def("__repr__", [](const Theorem& t) { return "<Theorem " + t.str() + ">"; });

  py::class_<Lattice>(m, "Lattice")
      .def_static("four_chain", [] { return Lattice(TaintLattice::four_chain()); })
      .def_static("load", &Lattice::load, py::arg("text"))
      .def_property_readonly("members", &Lattice::members)
      .def_property_readonly("bottom", &Lattice::bottom)
      .def_property_readonly("hasse", &Lattice::hasse)
      .def("leq", &Lattice::leq)
      .def("join", &Lattice::join)
      .def("scheme_label", &Lattice::scheme);

  py::class_<Session>(m, "_Session").def("request", &Session::request, py::arg("line"));

  py::class_<Theory>(m, "Theory")
      .def(py::init<std::optional<Lattice>>(), py::arg("lattice") = py::none())
      .def("run_text", &Theory::run_text, py::arg("text"), py::arg("file") = "<string>",
           py::arg("base_dir") = ".")
      .def("run_file", &Theory::run_file, py::arg("path"))
      .def_property_readonly("report", &Theory::report)
      .def_property_readonly("lattice", &Theory::lattice)
      .def("theorem_names", &Theory::theorem_names)
      .def("theorem", &Theory::theorem, py::arg("name"))
      .def("unwind", &Theory::unwind, py::arg("name"))
      .def("export_proof", &Theory::export_proof, py::arg("name"))
      .def("certify", &Theory::certify, py::arg("text"))
      .def("parse", &Theory::parse, py::arg("text"))
      .def("_session", &Theory::session);
}
