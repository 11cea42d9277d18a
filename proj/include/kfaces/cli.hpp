/**
 * @brief Command-line front end.
 *
 *   kfaces modulus d k            kfaces gaps d k [--horizon B] [--exhaustive]
 *   kfaces matrix d               kfaces certificate d k
 *   kfaces g2f d g0 g1 ...        kfaces construct d k
 *   kfaces f2g d f0 f1 ...        kfaces bounds d k
 *   kfaces realizable d k n       kfaces vertex d
 *   kfaces pascal p k r [--span S]
 *
 * Common flags: --format json|csv|text, --jobs N, --out FILE, --timing.
 * Exit status: 0 success, 1 domain error, 2 usage error.
 *
 * JSON output is an envelope {command, params, result[, horizon_used]
 * [, elapsed_ms]}; every number is a decimal string. elapsed_ms appears only
 * with --timing so that default output is byte-identical across runs.
 */
#pragma once

#include "kfaces/kfaces.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace kfaces::cli {

using Json = nlohmann::ordered_json;

inline std::string num(const Natural& n) { return n.str(); }
inline std::string num(unsigned n) { return std::to_string(n); }
inline std::string num(std::uint64_t n) { return std::to_string(n); }

inline Json num_list(const std::vector<Natural>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(num(x));
  return a;
}

template <class T>
Json opt_num(const std::optional<T>& v) {
  return v ? Json(num(*v)) : Json(nullptr);
}

inline Natural parse_natural(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not a nonnegative integer: '" + s + "'");
  return Natural(s);
}

// --- result payloads ------------------------------------------------------

inline Json to_json(const ModulusResult& r) {
  return Json{{"g_gcd", num(r.g_gcd)}, {"g_formula", num(r.g_formula)}, {"agree", r.agree}};
}

inline Json to_json(const MdMatrix& m) {
  Json rows = Json::array();
  for (unsigned i = 0; i <= m.delta(); ++i) rows.push_back(num_list(m.row(i)));
  return Json{{"d", num(m.d())}, {"delta", num(m.delta())}, {"rows", rows}};
}

inline Json to_json(const LambdaRepr& l) {
  Json a = Json::array();
  for (const auto& x : l.lambdas) a.push_back(num(x));
  return Json{{"lambdas", a}, {"max_abs", num(l.max_abs)}};
}

inline Json to_json(const Certificate& c) {
  Json j = to_json(c.lambdas);
  j["modulus"] = num(c.modulus);
  j["c"] = num(c.c);
  j["g_base"] = num_list(c.g_base.entries);
  j["n_start"] = num(c.n_start);
  j["validated"] = c.validated;
  return j;
}

inline Json to_json(const GapReport& r) {
  return Json{{"modulus", num(r.modulus)},
              {"simplex_count", num(r.simplex_count)},
              {"proven_horizon", num(r.proven_horizon)},
              {"horizon_source", r.horizon_source},
              {"horizon", num(r.horizon)},
              {"gaps", num_list(r.gaps)},
              {"n_exact", num(r.n_exact)},
              {"threshold", num(r.threshold)},
              {"swept_to", num(r.swept_to)},
              {"closed_by_window", r.closed_by_window},
              {"exact", r.exact}};
}

inline Json to_json(const Bounds& b) {
  return Json{{"cubic_bound", num(b.cubic_bound)}, {"large_k_bound", opt_num(b.large_k_bound)}, {"trivial_gap", opt_num(b.trivial_gap)}};
}

inline Json to_json(const VertexBounds& v) {
  return Json{{"odd", v.odd},
              {"gap_value", opt_num(v.gap_value)},
              {"upper", num(v.upper)},
              {"first_above", num(v.first_above)}};
}

// --- rendering --------------------------------------------------------------

enum class Format { json, csv, text };

struct Output {
  std::string command;
  Json params = Json::object();
  Json result = Json::object();
  std::optional<Natural> horizon_used;
  // Optional tabular view for csv/text (gap lists, matrices).
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> table_header;
};

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + ")";
  }
  if (v.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      s += (first ? "" : ", ") + k + ": " + scalar_text(x);
      first = false;
    }
    return s + "}";
  }
  return v.dump();
}

inline std::string render(const Output& o, Format f, std::optional<std::int64_t> elapsed_ms) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      Json env{{"command", o.command}, {"params", o.params}, {"result", o.result}};
      if (o.horizon_used) env["horizon_used"] = num(*o.horizon_used);
      if (elapsed_ms) env["elapsed_ms"] = std::to_string(*elapsed_ms);
      os << env.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      if (!o.table_header.empty()) {
        for (std::size_t i = 0; i < o.table_header.size(); ++i) os << (i ? "," : "") << o.table_header[i];
        os << '\n';
        for (const auto& row : o.table) {
          for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
          os << '\n';
        }
      } else {
        os << "key,value\n";
        for (const auto& [k, v] : o.result.items()) {
          std::string s = scalar_text(v);
          if (s.find_first_of(",\"") != std::string::npos) s = '"' + s + '"';
          os << k << ',' << s << '\n';
        }
      }
      break;
    }
    case Format::text: {
      os << o.command;
      for (const auto& [k, v] : o.params.items()) os << ' ' << k << '=' << scalar_text(v);
      os << '\n';
      if (!o.table.empty()) {
        std::vector<std::size_t> width;
        for (const auto& row : o.table)
          for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
          }
        for (const auto& row : o.table) {
          for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? " " : "  ") << std::string(width[i] - row[i].size(), ' ') << row[i];
          os << '\n';
        }
      }
      std::size_t key_width = 0;
      for (const auto& [k, v] : o.result.items()) key_width = std::max(key_width, k.size());
      for (const auto& [k, v] : o.result.items())
        if (!(v.is_array() && !o.table.empty() && (k == "rows" || k == "gaps")))
          os << "  " << k << std::string(key_width - k.size(), ' ') << " : " << scalar_text(v) << '\n';
      break;
    }
  }
  return os.str();
}

// --- dispatch ----------------------------------------------------------------

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Face numbers of simple polytopes: moduli, gaps and constructions", "kfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  unsigned jobs = 1;
  std::string out_file;
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", jobs, "Worker threads for gap sweeps")->check(CLI::Range(1u, 256u));
  app.add_option("--out", out_file, "Write output to FILE instead of stdout");
  app.add_flag("--timing", timing, "Include elapsed_ms in JSON output");

  unsigned d = 0, k = 0;
  std::string n_text, horizon_text;
  std::vector<std::string> values;
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t span = 0;
  bool exhaustive = false;

  std::function<Output()> action;
  auto dk = [&](CLI::App* sub) {
    sub->add_option("d", d, "Dimension")->required();
    sub->add_option("k", k, "Face dimension")->required();
  };

  auto* s_mod = app.add_subcommand("modulus", "G(d,k) by gcd and by closed form");
  dk(s_mod);
  s_mod->callback([&] {
    action = [&] {
      Output o{"modulus"};
      o.params = Json{{"d", num(d)}, {"k", num(k)}};
      o.result = to_json(modulus(d, k));
      return o;
    };
  });

  auto* s_mat = app.add_subcommand("matrix", "The matrix M_d");
  s_mat->add_option("d", d, "Dimension")->required();
  s_mat->callback([&] {
    action = [&] {
      const MdMatrix m(d);
      Output o{"matrix"};
      o.params = Json{{"d", num(d)}};
      o.result = to_json(m);
      for (unsigned kk = 0; kk < d; ++kk) o.table_header.push_back("k" + std::to_string(kk));
      for (unsigned i = 0; i <= m.delta(); ++i) {
        std::vector<std::string> row;
        for (const auto& x : m.row(i)) row.push_back(num(x));
        o.table.push_back(std::move(row));
      }
      return o;
    };
  });

  auto* s_g2f = app.add_subcommand("g2f", "f-vector of an M-sequence");
  s_g2f->add_option("d", d, "Dimension")->required();
  s_g2f->add_option("g", values, "g_0 g_1 ...")->required();
  s_g2f->callback([&] {
    action = [&] {
      GVector g;
      for (const auto& v : values) g.entries.push_back(parse_natural(v));
      const FVector f = g_to_f(g, d);
      Output o{"g2f"};
      o.params = Json{{"d", num(d)}, {"g", num_list(g.entries)}};
      o.result = Json{{"f", num_list(f.counts)}};
      return o;
    };
  });

  auto* s_f2g = app.add_subcommand("f2g", "M-sequence of an f-vector");
  s_f2g->add_option("d", d, "Dimension")->required();
  s_f2g->add_option("f", values, "f_0 ... f_{d-1}")->required();
  s_f2g->callback([&] {
    action = [&] {
      FVector f{d, {}};
      for (const auto& v : values) f.counts.push_back(parse_natural(v));
      Output o{"f2g"};
      o.params = Json{{"d", num(d)}, {"f", num_list(f.counts)}};
      try {
        const GVector g = f_to_g(f);
        o.result = Json{{"is_fvector", true}, {"g", num_list(g.entries)}};
      } catch (const not_an_fvector& e) {
        o.result = Json{{"is_fvector", false}, {"reason", e.what()}};
      }
      return o;
    };
  });

  auto* s_real = app.add_subcommand("realizable", "Is n the number of k-faces of a simple d-polytope?");
  dk(s_real);
  s_real->add_option("n", n_text, "Face count")->required();
  s_real->callback([&] {
    action = [&] {
      const Natural n = parse_natural(n_text);
      const auto w = realizable_witness(d, k, n);
      Output o{"realizable"};
      o.params = Json{{"d", num(d)}, {"k", num(k)}, {"n", num(n)}};
      o.result = Json{{"realizable", w.has_value()}, {"witness", w ? num_list(w->entries) : Json(nullptr)}};
      return o;
    };
  });

  auto* s_gaps = app.add_subcommand("gaps", "All (d,k)-gaps up to a proven horizon");
  dk(s_gaps);
  s_gaps->add_option("--horizon", horizon_text, "Cap the sweep (never claims exactness below the proven bound)");
  s_gaps->add_flag("--exhaustive", exhaustive, "Sweep every multiple up to the horizon");
  s_gaps->callback([&] {
    action = [&] {
      GapOptions opt;
      if (!horizon_text.empty()) opt.horizon_override = parse_natural(horizon_text);
      opt.exhaustive = exhaustive;
      opt.jobs = jobs;
      const GapReport rep = enumerate_gaps(d, k, opt);
      Output o{"gaps"};
      o.params = Json{{"d", num(d)}, {"k", num(k)}};
      if (opt.horizon_override) o.params["horizon"] = num(*opt.horizon_override);
      if (exhaustive) o.params["exhaustive"] = true;
      o.result = to_json(rep);
      o.horizon_used = rep.horizon;
      o.table_header = {"gap"};
      for (const auto& g : rep.gaps) o.table.push_back({num(g)});
      return o;
    };
  });

  auto* s_cert = app.add_subcommand("certificate", "Explicit M-sequences covering every G-multiple past N");
  dk(s_cert);
  s_cert->callback([&] {
    action = [&] {
      Output o{"certificate"};
      o.params = Json{{"d", num(d)}, {"k", num(k)}};
      o.result = to_json(certificate(d, k));
      return o;
    };
  });

  auto* s_con = app.add_subcommand("construct", "g-vector construction for k >= floor((d+1)/2)");
  dk(s_con);
  s_con->callback([&] {
    action = [&] {
      const auto c = construct_g_large_k(d, k);
      Output o{"construct"};
      o.params = Json{{"d", num(d)}, {"k", num(k)}};
      o.result = Json{{"g", num_list(c.g.entries)}, {"n", num(c.n)}};
      return o;
    };
  });

  auto* s_bnd = app.add_subcommand("bounds", "Closed-form bounds on the largest gap");
  dk(s_bnd);
  s_bnd->callback([&] {
    action = [&] {
      Output o{"bounds"};
      o.params = Json{{"d", num(d)}, {"k", num(k)}};
      o.result = to_json(bounds(d, k));
      return o;
    };
  });

  auto* s_vx = app.add_subcommand("vertex", "Vertex-count gap value and threshold");
  s_vx->add_option("d", d, "Dimension")->required();
  s_vx->callback([&] {
    action = [&] {
      Output o{"vertex"};
      o.params = Json{{"d", num(d)}};
      o.result = to_json(vertex_case(d));
      return o;
    };
  });

  auto* s_pas = app.add_subcommand("pascal", "Binomial coefficients modulo p^r");
  s_pas->add_option("p", p, "Prime")->required();
  s_pas->add_option("k", k, "Column index (binomials C(., k+1))")->required();
  s_pas->add_option("r", r, "Exponent r >= 1")->required();
  s_pas->add_option("--span", span, "Largest d for the periodicity check (default 2 p^(e+r))");
  s_pas->callback([&] {
    action = [&] {
      const PeriodSpec spec = PeriodSpec::make(p, k, r);
      const std::uint64_t sp = span ? span : 2 * spec.period();
      const ZeroRun z = longest_zero_run(spec);
      Output o{"pascal"};
      o.params = Json{{"p", num(p)}, {"k", num(k)}, {"r", num(r)}, {"span", num(sp)}};
      o.result = Json{{"e", num(spec.e)},
                      {"period", num(spec.period())},
                      {"periodicity", check_periodicity(spec, sp)},
                      {"reflection", check_reflection(spec)},
                      {"zero_run", Json{{"start", num(z.start)}, {"length", num(z.length)}, {"unique", z.unique}}},
                      {"valuation_bound", valuation_bound_check(p, k)}};
      return o;
    };
  });

  std::vector<std::string> args(argv.rbegin(), argv.rend());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "kfaces: " << e.what() << '\n';
    return 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    const Output o = action();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    const Format f = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;
    const std::string payload = render(o, f, timing ? std::optional<std::int64_t>(ms) : std::nullopt);
    if (!out_file.empty()) {
      std::ofstream file(out_file, std::ios::binary);
      if (!file) {
        err << "kfaces: cannot open " << out_file << '\n';
        return 1;
      }
      file << payload;
    } else {
      out << payload;
    }
    err << "kfaces: " << o.command << " done in " << ms << " ms\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "kfaces: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    err << "kfaces: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace kfaces::cli
