// Command-line front end: classification and strong Gram congruence
// certificates for connected non-negative unit forms of Dynkin type A.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gramclass/congruence.hpp"
#include "gramclass/error.hpp"
#include "gramclass/io.hpp"
#include "gramclass/standard.hpp"
#include "gramclass/unitform.hpp"

namespace gc = gramclass;
using gc::Json;

namespace {

void emit_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void emit_matrix_text(const gc::IntMatrix& m, const std::string& label) {
  std::cout << label << " (" << m.rows() << " x " << m.cols() << ")\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) std::cout << ' ';
      std::cout << m.at(i, j);
    }
    std::cout << '\n';
  }
}

void emit_quiver(const gc::Quiver& q, bool text) {
  if (!text) {
    emit_json(gc::to_json(q));
    return;
  }
  std::cout << q.m() << ' ' << q.n() << '\n';
  for (const auto& [s, t] : q.arrows) std::cout << s << ' ' << t << '\n';
}

gc::UnitForm as_form(const gc::Input& in) {
  if (in.is_quiver) return gc::from_quiver(in.quiver);
  return in.form;
}

Json classification_json(const gc::Classification& c) {
  Json j;
  j["n"] = c.n;
  j["corank"] = c.corank;
  j["dynkin_rank"] = c.dynkin_rank;
  j["dynkin_type"] = "A" + std::to_string(c.dynkin_rank);
  j["cycle_type"] = gc::to_json(c.cycle_type);
  j["degeneracy"] = c.degeneracy;
  j["reduced_corank"] = c.reduced_corank;
  j["coxeter_polynomial"] = c.coxeter_polynomial.str();
  j["factorization"] = c.factorization;
  if (c.numbers.h_finite)
    j["coxeter_number"] = c.numbers.h;
  else
    j["coxeter_number"] = "infinite";
  j["reduced_coxeter_number"] = c.numbers.h_re;
  return j;
}

Json certificate_json(const gc::CongruenceCertificate& cert) {
  Json rho = Json::array();
  for (int v : cert.rho.img) rho.push_back(v);
  Json j;
  j["rho"] = rho;
  j["B"] = gc::to_json(cert.B);
  j["target_partition"] = gc::to_json(cert.target_partition);
  j["degeneracy"] = cert.degeneracy;
  j["verified"] = cert.verified;
  return j;
}

Json report_json(const gc::VerifyReport& r) {
  Json j;
  j["weak"] = r.weak;
  j["strong"] = r.strong;
  j["unimodular"] = r.unimodular;
  j["determinant"] = gc::json_int(r.determinant);
  if (r.corank_le1_shortcut.has_value()) j["corank_le1_shortcut"] = *r.corank_le1_shortcut;
  return j;
}

void reverify_or_die(const gc::IntMatrix& B, const gc::UnitForm& src, const gc::UnitForm& dst) {
  gc::VerifyReport rep = gc::verify(B, src, dst);
  gc::check(rep.strong && rep.unimodular, gc::Errc::Internal,
            "certificate failed exact re-verification before output");
}

std::uint64_t default_seed() {
  const char* env = std::getenv("GRAMCLASS_SEED");
  if (!env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    return 0;
  }
}

struct Options {
  bool text = false;

  std::string classify_file;

  std::vector<int> standard_parts;
  int standard_deg = 0;
  bool standard_star = false;

  std::string congruence_input;
  std::string congruence_target;
  std::string congruence_emit;
  bool congruence_json = false;

  std::string verify_matrix;
  std::string verify_src;
  std::string verify_dst;
  std::string verify_batch;

  std::string realize_file;
  std::string invert_file;
  std::string flip_file;

  int count_n = 0;
  int count_c = 0;

  int random_m = 0;
  int random_n = 0;
  std::uint64_t random_seed = default_seed();
};

int run_classify(const Options& opt) {
  gc::UnitForm form = as_form(gc::load_input(opt.classify_file));
  gc::Classification cls = gc::classify(form);
  if (!opt.text) {
    emit_json(classification_json(cls));
    return 0;
  }
  std::cout << "n: " << cls.n << '\n'
            << "corank: " << cls.corank << '\n'
            << "dynkin_type: A" << cls.dynkin_rank << '\n'
            << "cycle_type: " << cls.cycle_type.str() << '\n'
            << "degeneracy: " << cls.degeneracy << '\n'
            << "reduced_corank: " << cls.reduced_corank << '\n'
            << "coxeter_polynomial: " << cls.coxeter_polynomial.str() << '\n'
            << "factorization: " << cls.factorization << '\n';
  if (cls.numbers.h_finite)
    std::cout << "coxeter_number: " << cls.numbers.h << '\n';
  else
    std::cout << "coxeter_number: infinite\n";
  std::cout << "reduced_coxeter_number: " << cls.numbers.h_re << '\n';
  return 0;
}

int run_standard(const Options& opt) {
  gc::Partition pi(opt.standard_parts);
  gc::Quiver q = gc::standard_quiver(
      pi, opt.standard_deg,
      opt.standard_star ? gc::StandardVariant::Star : gc::StandardVariant::A);
  emit_quiver(q, opt.text);
  return 0;
}

int run_congruence(const Options& opt) {
  const bool text = opt.text && !opt.congruence_json;
  if (opt.congruence_target.empty()) {
    gc::Input in = gc::load_input(opt.congruence_input);
    gc::CongruenceCertificate cert = in.is_quiver
                                         ? gc::congruence_to_standard(in.quiver)
                                         : gc::congruence_forms(in.form);
    reverify_or_die(cert.B, gc::from_quiver(cert.source), gc::from_quiver(cert.target));
    if (!opt.congruence_emit.empty())
      gc::save_text(gc::matrix_to_text(cert.B), opt.congruence_emit);
    if (!text) {
      emit_json(certificate_json(cert));
      return 0;
    }
    std::cout << "rho:";
    for (int v : cert.rho.img) std::cout << ' ' << v;
    std::cout << '\n';
    emit_matrix_text(cert.B, "B");
    std::cout << "target_partition: " << cert.target_partition.str() << '\n'
              << "degeneracy: " << cert.degeneracy << '\n'
              << "verified: " << (cert.verified ? "true" : "false") << '\n';
    return 0;
  }
  gc::UnitForm q = as_form(gc::load_input(opt.congruence_input));
  gc::UnitForm qp = as_form(gc::load_input(opt.congruence_target));
  gc::BetweenResult br = gc::congruence_between(q, qp);
  reverify_or_die(br.B, q, qp);
  if (!opt.congruence_emit.empty()) gc::save_text(gc::matrix_to_text(br.B), opt.congruence_emit);
  if (!text) {
    Json j;
    j["B"] = gc::to_json(br.B);
    j["cycle_type"] = gc::to_json(br.cycle_type);
    j["degeneracy"] = br.degeneracy;
    j["verified"] = true;
    emit_json(j);
    return 0;
  }
  emit_matrix_text(br.B, "B");
  std::cout << "cycle_type: " << br.cycle_type.str() << '\n'
            << "degeneracy: " << br.degeneracy << '\n'
            << "verified: true\n";
  return 0;
}

int run_verify(const Options& opt) {
  if (opt.verify_batch.empty()) {
    if (opt.verify_matrix.empty() || opt.verify_src.empty() || opt.verify_dst.empty()) {
      std::cerr << "verify needs --B plus source and target files (or --batch DIR)\n";
      return 64;
    }
    gc::IntMatrix B = gc::load_matrix(opt.verify_matrix);
    gc::UnitForm q = as_form(gc::load_input(opt.verify_src));
    gc::UnitForm qp = as_form(gc::load_input(opt.verify_dst));
    gc::VerifyReport rep = gc::verify(B, q, qp);
    if (!opt.text) {
      emit_json(report_json(rep));
      return 0;
    }
    std::cout << "weak: " << (rep.weak ? "true" : "false") << '\n'
              << "strong: " << (rep.strong ? "true" : "false") << '\n'
              << "unimodular: " << (rep.unimodular ? "true" : "false") << '\n'
              << "determinant: " << rep.determinant << '\n';
    if (rep.corank_le1_shortcut.has_value())
      std::cout << "corank_le1_shortcut: " << (*rep.corank_le1_shortcut ? "true" : "false")
                << '\n';
    return 0;
  }

  namespace fs = std::filesystem;
  gc::check(fs::is_directory(opt.verify_batch), gc::Errc::ParseError,
            "not a directory: " + opt.verify_batch);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(opt.verify_batch))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  Json out = Json::array();
  bool any_failed = false;
  for (const fs::path& file : files) {
    Json item;
    item["file"] = file.filename().string();
    try {
      gc::Json j;
      {
        std::ifstream ifs(file);
        gc::check(bool(ifs), gc::Errc::ParseError, "cannot open file: " + file.string());
        try {
          j = gc::Json::parse(ifs);
        } catch (const nlohmann::json::parse_error& e) {
          gc::fail(gc::Errc::ParseError, file.string() + ": " + e.what());
        }
      }
      gc::check(j.is_object() && j.contains("B") && j.contains("source") && j.contains("target"),
                gc::Errc::InvariantError,
                "batch entry needs \"B\", \"source\" and \"target\" keys");
      gc::IntMatrix B = gc::matrix_from_json(j["B"]);
      auto read_form = [](const Json& v) {
        if (v.is_object() && v.contains("arrows")) return gc::from_quiver(gc::quiver_from_json(v));
        return gc::form_from_json(v);
      };
      gc::UnitForm q = read_form(j["source"]);
      gc::UnitForm qp = read_form(j["target"]);
      gc::VerifyReport rep = gc::verify(B, q, qp);
      if (!rep.strong || !rep.unimodular) any_failed = true;
      Json rj = report_json(rep);
      for (auto& [key, value] : rj.items()) item[key] = value;
    } catch (const gc::Error& e) {
      item["error"] = gc::errc_name(e.kind());
      item["message"] = e.what();
      any_failed = true;
    }
    out.push_back(std::move(item));
  }
  if (!opt.text) {
    emit_json(out);
  } else {
    for (const auto& item : out) {
      std::cout << item["file"].get<std::string>() << ":";
      if (item.contains("error"))
        std::cout << " error=" << item["error"].get<std::string>();
      else
        std::cout << " weak=" << item["weak"].dump() << " strong=" << item["strong"].dump()
                  << " unimodular=" << item["unimodular"].dump()
                  << " determinant=" << item["determinant"].dump();
      std::cout << '\n';
    }
  }
  return any_failed ? 2 : 0;
}

int run_realize(const Options& opt) {
  gc::UnitForm form = gc::load_form(opt.realize_file);
  emit_quiver(gc::realize_as_quiver(form), opt.text);
  return 0;
}

int run_invert(const Options& opt) {
  gc::Quiver q = gc::load_quiver(opt.invert_file);
  gc::validate(q);
  emit_quiver(gc::inverse_quiver(q), opt.text);
  return 0;
}

int run_count(const Options& opt) {
  long long count = gc::count_classes(opt.count_n, opt.count_c);
  std::vector<gc::Partition> parts =
      gc::partitions_part1(opt.count_n - opt.count_c + 1, opt.count_c);
  if (!opt.text) {
    Json j;
    j["count"] = count;
    Json list = Json::array();
    for (const gc::Partition& p : parts) list.push_back(gc::to_json(p));
    j["partitions"] = list;
    emit_json(j);
    return 0;
  }
  std::cout << "count: " << count << '\n';
  for (const gc::Partition& p : parts) std::cout << p.str() << '\n';
  return 0;
}

int run_random(const Options& opt) {
  emit_quiver(gc::random_quiver(opt.random_m, opt.random_n, opt.random_seed), opt.text);
  return 0;
}

int run_flip(const Options& opt) {
  gc::UnitForm form = as_form(gc::load_input(opt.flip_file));
  gc::IntMatrix C = gc::triangular_flip(form);
  if (!opt.text) {
    Json j;
    j["C"] = gc::to_json(C);
    j["verified"] = true;
    emit_json(j);
    return 0;
  }
  emit_matrix_text(C, "C");
  std::cout << "verified: true\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Strong Gram classification of connected non-negative unit forms of type A"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand
  app.add_flag("--text", opt.text, "human-readable output instead of JSON");

  CLI::App* classify = app.add_subcommand("classify", "classify a unit form or quiver");
  classify->add_option("file", opt.classify_file, "form or quiver file")->required();

  CLI::App* standard = app.add_subcommand("standard", "construct a standard quiver");
  standard->add_option("--partition", opt.standard_parts, "partition parts, comma-separated")
      ->required()
      ->delimiter(',');
  standard->add_option("--deg", opt.standard_deg, "degeneracy degree (default 0)");
  standard->add_flag("--star", opt.standard_star, "emit the star-shaped variant");

  CLI::App* congruence =
      app.add_subcommand("congruence", "strong congruence certificate to the standard form");
  congruence->add_option("input", opt.congruence_input, "form or quiver file")->required();
  congruence->add_option("--target", opt.congruence_target,
                         "second form: certify congruence between the two");
  congruence->add_option("--emit-matrix", opt.congruence_emit,
                         "also write the matrix B to this file as text");
  congruence->add_flag("--json", opt.congruence_json, "force JSON output");

  CLI::App* verify = app.add_subcommand("verify", "check a claimed congruence matrix");
  verify->add_option("--B", opt.verify_matrix, "matrix file (text or JSON)");
  verify->add_option("source", opt.verify_src, "source form or quiver");
  verify->add_option("target", opt.verify_dst, "target form or quiver");
  verify->add_option("--batch", opt.verify_batch,
                     "directory of {B, source, target} JSON files to check");

  CLI::App* realize = app.add_subcommand("realize", "find a quiver realizing a form");
  realize->add_option("file", opt.realize_file, "unit form file")->required();

  CLI::App* invert = app.add_subcommand("invert", "inverse quiver");
  invert->add_option("file", opt.invert_file, "quiver file")->required();

  CLI::App* count = app.add_subcommand("count", "number of strong congruence classes");
  count->add_option("--n", opt.count_n, "number of variables")->required();
  count->add_option("--c", opt.count_c, "corank")->required();

  CLI::App* random = app.add_subcommand("random", "seed-deterministic random quiver");
  random->add_option("--m", opt.random_m, "vertex count")->required();
  random->add_option("--n", opt.random_n, "arrow count")->required();
  random->add_option("--seed", opt.random_seed, "RNG seed (default: GRAMCLASS_SEED env or 0)");

  CLI::App* flip = app.add_subcommand("flip", "C with C^T Ghat C = Ghat^T");
  flip->add_option("file", opt.flip_file, "unit form file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(opt);
    if (app.got_subcommand(standard)) return run_standard(opt);
    if (app.got_subcommand(congruence)) return run_congruence(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(realize)) return run_realize(opt);
    if (app.got_subcommand(invert)) return run_invert(opt);
    if (app.got_subcommand(count)) return run_count(opt);
    if (app.got_subcommand(random)) return run_random(opt);
    if (app.got_subcommand(flip)) return run_flip(opt);
  } catch (const gc::Error& e) {
    Json err;
    err["error"] = gc::errc_name(e.kind());
    err["message"] = e.what();
    std::cerr << err.dump(2) << '\n';
    return e.kind() == gc::Errc::Internal ? 70 : 2;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "Internal";
    err["message"] = e.what();
    std::cerr << err.dump(2) << '\n';
    return 70;
  }
  return 0;
}
