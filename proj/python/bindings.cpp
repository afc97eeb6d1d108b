#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bnchain/brill_noether.hpp"
#include "bnchain/cli.hpp"
#include "bnchain/json_io.hpp"
#include "bnchain/oracle.hpp"
#include "bnchain/sampling.hpp"

namespace py = pybind11;
using namespace bnchain;
using json_io::Json;

namespace {

ChainSpec chain(const std::string& text) { return json_io::chain_from_json(json_io::parse(text)); }
ChainDivisor divisor(const std::string& text) { return json_io::divisor_from_json(json_io::parse(text)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Brill-Noether loci on chains of cycles (JSON-in, JSON-out core)";

  // Exceptions from the library map to ValueError.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const std::out_of_range& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("count_syt", [](std::vector<int> shape) { return count_syt(Partition(std::move(shape))); });
  m.def("hook_length", [](std::vector<int> shape, int x, int y) { return hook_length(Partition(std::move(shape)), {x, y}); });
  m.def("dual", [](std::vector<int> shape) { return dual(Partition(std::move(shape))).rows(); });
  m.def(
      "disp_plus",
      [](std::vector<int> shape, std::optional<std::int64_t> z, std::int64_t modulus) {
        const ResidueSet s = z ? ResidueSet::residue_class(*z, modulus) : ResidueSet::none();
        return disp_plus(Partition(std::move(shape)), s).rows();
      },
      py::arg("shape"), py::arg("z") = py::none(), py::arg("modulus") = 0);
  m.def("partition_from_grda", [](int g, int r, int d, const std::vector<int>& alpha) {
    return partition_from_grda(g, r, d, alpha).rows();
  });
  m.def("rho", [](int g, int r, int d, const std::vector<int>& alpha) { return rho(g, r, d, alpha); });

  m.def("profile_json", [](const std::string& c) { return json_io::to_json(chain(c).profile()).dump(); });
  m.def("tableaux_json", [](std::vector<int> shape, const std::string& c) {
    Json out = Json::array();
    for (const auto& t : enumerate_tableaux(Partition(std::move(shape)), chain(c).profile())) out.push_back(json_io::to_json(t));
    return out.dump();
  });
  m.def("components_json", [](std::vector<int> shape, const std::string& c) {
    Json out = Json::array();
    for (const auto& comp : components(Partition(std::move(shape)), chain(c))) out.push_back(json_io::to_json(comp));
    return out.dump();
  });
  m.def("dimension", [](std::vector<int> shape, const std::string& c) { return dimension(Partition(std::move(shape)), chain(c)); });
  m.def("generality_json", [](const std::string& c, bool marked, bool brute) {
    const TorsionProfile p = chain(c).profile();
    const GeneralityVerdict v = brute ? is_general_bruteforce(p, marked, 2 * p.genus())
                                      : (marked ? is_general_marked(p) : is_general_unmarked(p));
    return json_io::to_json(v).dump();
  });
  m.def("expected_class_json", [](std::vector<int> shape, int g) {
    return json_io::to_json(expected_class(Partition(std::move(shape)), g)).dump();
  });

  m.def("standard_form_json", [](const std::string& c, const std::string& d) {
    return json_io::to_json(standard_form(divisor(d), chain(c))).dump();
  });
  m.def("weierstrass_partition", [](const std::string& c, const std::string& d) {
    return weierstrass_partition(divisor(d), chain(c)).rows();
  });
  m.def("rank", [](const std::string& c, const std::string& d) { return rank(divisor(d), chain(c)); });
  m.def("cross_check_json", [](const std::string& c, const std::string& d) {
    return json_io::to_json(cross_check(chain(c), divisor(d))).dump();
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
