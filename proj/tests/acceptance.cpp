// Acceptance sweep: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <iostream>
#include <random>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include "hall/classical_hall.hpp"
#include "hall/cli.hpp"
#include "hall/derived_hall.hpp"
#include "hall/io.hpp"
#include "hall/lf_calculus.hpp"
#include "hall/span_model.hpp"
#include "hall/verify.hpp"
#include "oracles.hpp"
#include "random_squares.hpp"

namespace {

using json = nlohmann::json;

int failed = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!ok) ++failed;
}

hall::QuiverPtr a1() { return std::make_shared<const hall::Quiver>(1, std::vector<hall::Arrow>{}); }
hall::QuiverPtr a2() { return std::make_shared<const hall::Quiver>(2, std::vector<hall::Arrow>{{0, 1}}); }

bool check_ok(const json& r, const std::string& name) {
  return r["checks"][name]["status"] == "pass" && r["checks"][name]["failures"].empty();
}

std::string cases(const json& r, const std::string& name) { return r["checks"][name]["cases"].dump(); }

struct Context {
  std::string label;
  hall::Catalog cat;
};

std::string cli_output(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "hall");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = hall::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

}  // namespace

int main() {
  try {
    // 1
    {
      std::size_t checked = 0, bad = 0;
      for (hall::fq::Elem p : {2, 3}) {
        const auto cat = hall::Catalog::build(a1(), p, {4});
        const hall::ClassicalHall h(cat);
        for (unsigned n = 0; n <= 4; ++n) {
          for (unsigned k = 0; k <= n; ++k) {
            const hall::IsoClassId x{k}, y{n - k}, z{n};
            if (cat.dims(x) != hall::DimVector{k} || cat.dims(y) != hall::DimVector{n - k} ||
                cat.dims(z) != hall::DimVector{n}) {
              throw std::runtime_error("unexpected catalog order");
            }
            bad += h.hall_number(x, y, z) != oracle::gaussian_binomial(n, k, static_cast<unsigned>(p));
            ++checked;
          }
        }
      }
      report(1, bad == 0, std::to_string(checked) + " Gaussian binomials, " + std::to_string(bad) + " mismatches");
    }

    std::vector<Context> classical;
    classical.push_back({"A1 p=2 bound 3", hall::Catalog::build(a1(), 2, {3})});
    classical.push_back({"A1 p=3 bound 3", hall::Catalog::build(a1(), 3, {3})});
    classical.push_back({"A2 p=2 bound (2,2)", hall::Catalog::build(a2(), 2, {2, 2})});

    std::vector<json> reports;
    for (const auto& c : classical) {
      hall::VerifyConfig cfg;
      cfg.workers = 4;
      reports.push_back(hall::verify_classical(hall::ClassicalHall(c.cat), cfg));
    }

    const auto dcat = hall::Catalog::build(a2(), 2, {1, 1});
    const hall::DerivedHall dhall(dcat, hall::Window{-1, 1});
    hall::VerifyConfig dcfg;
    dcfg.workers = 4;
    const auto dreport = hall::verify_derived(dhall, dcfg);

    // 2
    {
      const bool ok = check_ok(reports[0], "riedtmann") && check_ok(reports[2], "riedtmann");
      report(2, ok, "A1 bound 3: " + cases(reports[0], "riedtmann") + " triples, A2 (2,2): " +
                        cases(reports[2], "riedtmann") + " triples");
    }

    // 3
    {
      bool ok = true;
      std::string detail;
      for (std::size_t i = 0; i < classical.size(); ++i) {
        ok = ok && check_ok(reports[i], "unit") && check_ok(reports[i], "assoc");
        detail += classical[i].label + ": " + cases(reports[i], "assoc") + " triples; ";
      }
      ok = ok && check_ok(dreport, "unit") && check_ok(dreport, "assoc");
      detail += "derived A2 window [-1,1] bound (1,1): " + cases(dreport, "assoc") + " triples";
      report(3, ok, detail);
    }

    // 4
    report(4, check_ok(dreport, "stalk"), cases(dreport, "stalk") + " module-stalk triples, A2 p=2 bound (1,1)");

    // 5
    {
      bool ok = true;
      std::string detail;
      for (std::size_t i = 0; i < classical.size(); ++i) {
        ok = ok && check_ok(reports[i], "span");
        detail += (i ? "; " : "") + classical[i].label + ": " + cases(reports[i], "span") + " pairs";
      }
      report(5, ok, detail);
    }

    // 6
    {
      std::mt19937_64 rng(20261018);
      std::size_t bad = 0, functions = 0;
      for (int i = 0; i < 100; ++i) {
        const auto r = hall::lf::check_base_change(oracle::random_square(rng, 5, 8));
        bad += !r.equal;
        functions += r.checked;
      }
      report(6, bad == 0, "100 squares, " + std::to_string(functions) + " characteristic functions, " +
                              std::to_string(bad) + " disagreements");
    }

    // 7
    {
      const auto& co = reports[2]["checks"]["orbit"];
      const auto& dor = dreport["checks"]["orbit"];
      const bool identity = check_ok(reports[2], "orbit") && check_ok(dreport, "orbit");
      const auto fails = co["uninverted_reading"]["fails"].get<std::size_t>() +
                         dor["uninverted_reading"]["fails"].get<std::size_t>();
      report(7, identity && fails > 0,
             "classical A2 (2,2): " + co["cases"].dump() + " triples (" + co["non_free_cases"].dump() +
                 " non-free); derived A2: " + dor["cases"].dump() + " triples (" + dor["non_free_cases"].dump() +
                 " non-free); uninverted reading fails on " + std::to_string(fails));
    }

    // 8
    report(8, check_ok(dreport, "finitary"), cases(dreport, "finitary") + " pairs, " +
                                                 dreport["checks"]["finitary"]["shifts_per_pair"].dump() +
                                                 " out-of-band shifts each");

    // 9
    report(9, check_ok(dreport, "homotopy") && dreport["checks"]["homotopy"]["cases"] == 50,
           cases(dreport, "homotopy") + " perturbations");

    // 10
    {
      const auto quiver = std::string(HALL_DATA_DIR) + "/a2.json";
      const std::vector<std::vector<std::string>> runs{
          {"verify", "--quiver", quiver, "-p", "2", "--bound", "2,2", "--checks", "all"},
          {"verify", "--quiver", quiver, "-p", "2", "--bound", "1,1", "--mode", "derived", "--window=-1,1",
           "--checks", "all"}};
      bool ok = true;
      std::size_t bytes = 0;
      for (const auto& base : runs) {
        auto one = base, four = base;
        one.insert(one.end(), {"--workers", "1"});
        four.insert(four.end(), {"--workers", "4"});
        int c1 = 0, c4 = 0;
        const auto out1 = cli_output(one, c1);
        const auto out4 = cli_output(four, c4);
        ok = ok && c1 == 0 && c4 == 0 && !out1.empty() && out1 == out4;
        bytes += out1.size();
      }
      report(10, ok, "classical and derived reports, workers 1 vs 4, " + std::to_string(bytes) + " bytes compared");
    }
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  return failed == 0 ? 0 : 1;
}
