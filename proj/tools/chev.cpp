// Command-line front end: roots, verify, witness, rewrite, factor, diameter.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chevalley/reports.hpp"
#include "chevalley/ring_config.hpp"
#include "chevalley/witness.hpp"

namespace {

struct Options {
  std::string system = "A2";
  std::string ring_path;
  std::string mod;
  std::string level = "2";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t mem_cap = chev::kDefaultMemoryCap;
  std::string out;
  std::string format;
  // witness
  std::string case_label;
  std::string root;
  std::string p = "2";
  std::string n_grid = "1,10,100,1000";
  std::size_t xi = 0;
  std::string elem;
  // rewrite / factor
  std::string input;
  std::string matrix;
  // diameter
  std::string seed_class = "a1";
  bool timing = false;
};

std::vector<std::string> split(std::string const& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

chev::Integer parse_integer(std::string const& text, char const* flag) {
  try {
    return chev::Integer(text, 10);
  } catch (std::invalid_argument const&) {
    throw std::invalid_argument(std::string("--") + flag + " expects an integer, got '" + text + "'");
  }
}

chev::RingPtr resolve_ring(Options const& o) {
  if (!o.ring_path.empty() && !o.mod.empty()) throw std::invalid_argument("give either --ring or --mod");
  if (!o.ring_path.empty()) return chev::load_ring_config(o.ring_path);
  if (!o.mod.empty()) return chev::RingSpec::modular(parse_integer(o.mod, "mod"));
  return chev::RingSpec::integers();
}

void emit(Options const& o, std::string const& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

std::string json_text(chev::Json const& j) { return j.dump(2) + "\n"; }

std::string witness_text(chev::Json const& j) {
  std::string out;
  if (j.contains("witnesses")) {
    for (auto const& w : j["witnesses"]) {
      out += "n=" + w["n"].get<std::string>() + " ";
      out += w.value("verified", false) ? "verified " : "FAILED ";
      if (w.contains("word")) out += std::to_string(w["letters"].get<std::size_t>()) + " letters: " + w["word"].get<std::string>();
      out += "\n";
    }
  } else {
    out += j["word"].get<std::string>() + "\n";
  }
  return out;
}

int run_report(Options const& o, chev::VerifyReport const& r, std::string (*text)(chev::Json const&) = nullptr) {
  if (o.format.empty() || o.format == "json") {
    emit(o, json_text(r.json));
  } else if (o.format == "text" && text) {
    emit(o, text(r.json));
  } else {
    throw std::invalid_argument("unsupported --format '" + o.format + "' for this command");
  }
  return r.pass ? 0 : 1;
}

std::string read_file(std::string const& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chevalley groups over rings: relations, bounded witnesses, word-norm diameters"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--system", o.system, "root system selector, e.g. A2, G2, A2xB2");
    sub->add_option("--out", o.out, "write output to this file");
    sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring_path, "ring configuration file (JSON)");
    sub->add_option("--mod", o.mod, "work over Z/m");
  };

  auto* roots = app.add_subcommand("roots", "print the root inventory and Cartan matrix");
  add_common(roots);

  auto* verify = app.add_subcommand("verify", "check structure constants, commutator formula and torus action");
  add_common(verify);
  add_ring(verify);
  verify->add_option("--trials", o.trials, "random parameter pairs per root pair");
  verify->add_option("--seed", o.seed, "seed of the random grid");

  auto* witness = app.add_subcommand("witness", "build and verify bounded power witnesses");
  add_common(witness);
  add_ring(witness);
  witness->add_option("--case", o.case_label, "A2/long, B2-short or G2-short");
  witness->add_option("--root", o.root, "target root, e.g. a1+a2");
  witness->add_option("--p", o.p, "the integer p");
  witness->add_option("--n", o.n_grid, "comma-separated exponents n");
  witness->add_option("--xi", o.xi, "index of the basis element xi");
  witness->add_option("--elem", o.elem, "write x_root(elem) instead of a power witness");
  witness->add_option("--level", o.level, "congruence level q for --elem");
  witness->add_option("--seed", o.seed, "accepted for uniformity; witnesses are deterministic");

  auto* rewrite = app.add_subcommand("rewrite", "split a product in the congruence subgroup into conjugates and coset letters");
  add_common(rewrite);
  add_ring(rewrite);
  rewrite->add_option("--level", o.level, "congruence level q");
  rewrite->add_option("input", o.input, "file holding the input word")->required();

  auto* factor = app.add_subcommand("factor", "factor a natural SL_n matrix into root elements");
  add_common(factor);
  add_ring(factor);
  factor->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','")->required();

  auto* diam = app.add_subcommand("diameter", "word-norm diameters of E(Phi, Z/m)");
  add_common(diam);
  diam->add_option("--mod", o.mod, "comma-separated moduli")->required();
  diam->add_option("--class", o.seed_class, "root whose x(1) seeds the generating class");
  diam->add_option("--mem-cap", o.mem_cap, "maximum number of stored elements");
  diam->add_flag("--timing", o.timing, "measure seconds (makes output run-dependent)");
  diam->add_option("--seed", o.seed, "accepted for uniformity; the computation is deterministic");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*roots) {
      if (o.format == "text" || o.format.empty()) {
        emit(o, chev::roots_text(o.system));
      } else if (o.format == "json") {
        emit(o, json_text(chev::roots_report(o.system)));
      } else {
        throw std::invalid_argument("roots supports json and text");
      }
      return 0;
    }
    if (*verify) return run_report(o, chev::verify_report(o.system, resolve_ring(o), o.trials, o.seed));
    if (*witness) {
      auto ring = resolve_ring(o);
      if (!o.elem.empty()) {
        if (o.root.empty()) throw std::invalid_argument("--elem needs --root");
        return run_report(o, chev::element_witness_report(o.system, ring, o.root, o.elem, parse_integer(o.level, "level")),
                          witness_text);
      }
      chev::WitnessRequest req;
      req.system = o.system;
      req.ring = ring;
      if (!o.case_label.empty()) req.case_label = o.case_label;
      if (!o.root.empty()) req.root = o.root;
      req.p = parse_integer(o.p, "p");
      req.xi = o.xi;
      req.n_grid.clear();
      for (auto const& n : split(o.n_grid, ',')) req.n_grid.push_back(parse_integer(n, "n"));
      return run_report(o, chev::witness_report(req), witness_text);
    }
    if (*rewrite) {
      return run_report(o, chev::rewrite_report(o.system, resolve_ring(o), parse_integer(o.level, "level"),
                                                read_file(o.input)),
                        [](chev::Json const& j) {
                          return "conjugated: " + j["conjugated_part"].get<std::string>() + "\ntail: " +
                                 j["tail"].get<std::string>() + "\n";
                        });
    }
    if (*factor) return run_report(o, chev::factor_report(o.system, resolve_ring(o), o.matrix), witness_text);
    if (*diam) {
      std::vector<chev::DiameterRow> rows;
      for (auto const& m : split(o.mod, ',')) {
        auto v = parse_integer(m, "mod");
        if (v < 2 || v > 65535) throw std::invalid_argument("moduli must lie in [2, 65535]");
        rows.push_back(chev::diameter_row(o.system, static_cast<std::uint32_t>(v.get_ui()), o.seed_class,
                                          o.mem_cap, o.timing));
      }
      if (o.format.empty() || o.format == "csv") {
        emit(o, chev::diameter_csv(rows));
      } else if (o.format == "json") {
        emit(o, json_text(chev::diameter_json(rows)));
      } else {
        throw std::invalid_argument("diameter supports csv and json");
      }
      return 0;
    }
  } catch (chev::CaseMismatch const& e) {
    std::cerr << "case mismatch: " << e.what() << "\n";
  } catch (chev::InputNotInH const& e) {
    std::cerr << "input not in H: " << e.what() << "\n";
  } catch (chev::MemoryBudgetExceeded const& e) {
    std::cerr << "memory budget exceeded: " << e.what() << "\n";
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
