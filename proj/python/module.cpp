// Python bindings for the main operations. All big numbers cross the
// boundary as decimal strings ("num" or "num/den") to keep the interface
// exact.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hct/arith.hpp"
#include "hct/conic.hpp"
#include "hct/construct.hpp"
#include "hct/curve.hpp"
#include "hct/family.hpp"
#include "hct/golden.hpp"
#include "hct/local.hpp"

namespace py = pybind11;
using namespace hct;

namespace {

Place place_from(const std::string& s) {
  if (s == "inf") return Place::infinite();
  return Place::finite(Int(s));
}

py::dict triple_dict(const Triple& t) {
  py::dict d;
  d["p"] = to_string(t.p);
  d["b"] = to_string(t.b);
  d["d"] = to_string(t.d);
  d["q"] = to_string(t.q());
  return d;
}

py::dict sextuple_dict(const Sextuple& s) {
  py::dict d;
  d["p"] = to_string(s.triple.p);
  d["b"] = to_string(s.triple.b);
  d["d"] = to_string(s.triple.d);
  d["alpha"] = to_string(s.alpha);
  d["beta"] = to_string(s.beta);
  d["gamma"] = to_string(s.gamma);
  d["witness"] = py::make_tuple(to_string(s.witness.u), to_string(s.witness.v),
                                to_string(s.witness.t));
  return d;
}

std::vector<std::string> poly_strings(const Poly& f) {
  std::vector<std::string> out;
  for (long i = 0; i <= f.degree(); ++i) out.push_back(to_string(f.coeff(static_cast<unsigned>(i))));
  return out;
}

}  // namespace

PYBIND11_MODULE(_hassecurves, m) {
  m.doc() = "exact-arithmetic toolkit for hyperelliptic curve families";

  m.def("is_prime", [](const std::string& n) { return is_prime(Int(n)); });
  m.def("legendre_symbol",
        [](const std::string& a, const std::string& p) { return legendre_symbol(Int(a), Int(p)); });
  m.def("valuation", [](const std::string& x, const std::string& p) {
    return valuation(rat_from_string(x), Int(p));
  });
  m.def("hilbert_symbol", [](const std::string& a, const std::string& b, const std::string& v) {
    return hilbert_symbol(rat_from_string(a), rat_from_string(b), place_from(v));
  });
  m.def("hilbert_product_check", [](const std::string& a, const std::string& b) {
    return hilbert_product_check(rat_from_string(a), rat_from_string(b));
  });
  m.def("hensel_lift", [](const std::vector<std::string>& coeffs, const std::string& x0,
                          const std::string& p, unsigned precision) {
    std::vector<Rat> f;
    for (const auto& c : coeffs) f.push_back(rat_from_string(c));
    return to_string(hensel_lift(f, rat_from_string(x0), Int(p), precision));
  });

  m.def("check_triple", [](const std::string& p, const std::string& b, const std::string& d) {
    auto r = check_triple(Triple{Int(p), Int(b), Int(d)});
    py::dict out;
    out["q"] = to_string(r.q);
    out["pass"] = r.pass();
    out["q_one_or_odd_prime"] = r.q_one_or_odd_prime;
    return out;
  });
  m.def("search_triples",
        [](const std::string& p, const std::string& b0, long xmax, long ymax) {
          py::list out;
          for (const auto& t : search_triples(Int(p), Int(b0), xmax, ymax))
            out.append(triple_dict(t));
          return out;
        });

  m.def("family_seed", [](int family_id) { return sextuple_dict(family_seed(family_id)); });
  m.def("check_conditions", [](int family_id, const std::string& n) {
    auto r = check_conditions(family_seed(family_id), Int(n));
    py::dict out;
    out["a3"] = r.a3;
    out["a4"] = r.a4;
    out["a5"] = r.a5;
    out["b1"] = r.b1;
    out["genus_gate"] = r.genus_gate;
    out["a5_value"] = to_string(r.a5_value);
    out["genus_residue"] = to_string(r.genus_residue);
    out["pass"] = r.pass();
    return out;
  });

  m.def("family_polynomial", [](int family_id, const std::string& n, const std::string& T) {
    CurveSpec c = family_polynomial(family_id, Int(n), rat_from_string(T));
    py::dict out;
    out["n"] = to_string(c.n);
    out["family"] = family_id;
    out["T"] = T;
    out["coefficients_ascending"] = poly_strings(c.f);
    out["source"] = sextuple_dict(c.source);
    return out;
  });

  m.def("separability_oracle", [](const std::vector<std::string>& coeffs) {
    std::vector<Rat> c;
    for (const auto& s : coeffs) c.push_back(rat_from_string(s));
    return separability_oracle(Poly(std::move(c)));
  });

  m.def("local_solvability_report",
        [](int family_id, const std::string& n, const std::string& T, const std::string& bound) {
          CurveSpec c = family_polynomial(family_id, Int(n), rat_from_string(T));
          auto rep = local_solvability_report(c.source, Int(n), Int(bound));
          py::list entries;
          for (const auto& e : rep.entries) {
            py::dict d;
            d["place"] = e.place;
            d["status"] = e.status;
            d["witness"] = e.witness;
            if (e.certificate) {
              py::dict cert;
              cert["prime"] = to_string(e.certificate->prime);
              cert["delta"] = e.certificate->delta;
              cert["modulus"] = to_string(e.certificate->modulus);
              cert["verified"] = e.certificate->verified;
              d["certificate"] = cert;
            }
            entries.append(d);
          }
          py::dict out;
          out["entries"] = entries;
          out["overall_solvable"] = rep.overall_solvable;
          return out;
        });

  m.def("search_rational_points",
        [](int family_id, const std::string& n, const std::string& T, const std::string& bound) {
          CurveSpec c = family_polynomial(family_id, Int(n), rat_from_string(T));
          py::list out;
          for (const auto& pt : search_rational_points(c, Int(bound))) {
            py::dict d;
            d["at_infinity"] = pt.at_infinity;
            if (!pt.at_infinity) {
              d["x"] = to_string(pt.x);
              d["y"] = to_string(pt.y);
            }
            out.append(d);
          }
          return out;
        });

  m.def("threefold_scan", [](const std::string& p, const std::string& b, const std::string& d,
                             unsigned precision) {
    auto sc = threefold_2adic_obstruction_scan(Triple{Int(p), Int(b), Int(d)}, precision);
    py::dict out;
    out["precision_exponent"] = sc.precision_exponent;
    out["total_classes"] = sc.total_classes;
    out["excluded"] = sc.excluded;
    out["admissible"] = sc.admissible;
    out["all_admissible_half"] = sc.all_admissible_half;
    return out;
  });

  m.def("run_golden_suite", [] {
    py::list out;
    for (const auto& c : run_golden_suite())
      out.append(py::make_tuple(c.name, c.pass, c.detail));
    return out;
  });
}
