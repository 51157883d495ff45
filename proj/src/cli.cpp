#include "nichols/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <sstream>

#include "nichols/records.hpp"

namespace nichols {

namespace {

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw spec_error("malformed --n list: " + text);
    }
  }
  if (out.empty()) throw spec_error("empty --n list");
  return out;
}

// accepted aliases for the canonical irrep labels
std::string normalize_rep_spec(std::string s) {
  std::string out;
  for (size_t i = 0; i < s.size();) {
    if (s.compare(i, 3, "⊗") == 0) {  // tensor sign
      out += '*';
      i += 3;
    } else if (s.compare(i, 2, "ε") == 0) {  // epsilon
      out += "eps";
      i += 2;
    } else {
      out += s[i];
      ++i;
    }
  }
  std::string canon;
  for (size_t i = 0; i < out.size();) {
    if (out[i] == '*' || out[i] == 'x') {
      canon += "⊗";
      ++i;
    } else {
      canon += out[i];
      ++i;
    }
  }
  return canon;
}

Irrep find_rep(const Subgroup& cent, const std::string& spec) {
  auto irreps = centralizer_irreps(cent);
  std::string want = normalize_rep_spec(spec);
  for (auto& r : irreps)
    if (normalize_rep_spec(r.label()) == want) return r;
  std::string have;
  for (const auto& r : irreps) have += (have.empty() ? "" : ", ") + r.label();
  throw spec_error("unknown representation '" + spec + "' for centralizer " + cent.label +
                   "; available: " + have);
}

std::string format_rows(const std::vector<ScreenRow>& rows, const std::string& fmt) {
  if (fmt == "json") return rows_to_json(rows);
  if (fmt == "csv") return rows_to_csv(rows);
  return rows_to_text(rows);
}

long long env_budget(long long fallback) {
  const char* e = std::getenv("NICHOLS_BUDGET");
  if (!e) return fallback;
  try {
    return std::stoll(e);
  } catch (const std::exception&) {
    throw spec_error("malformed NICHOLS_BUDGET value");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err) {
  CLI::App app{"Nichols algebra screener for conjugacy-class braidings"};
  app.require_subcommand(1);

  std::string group_spec, class_spec, rep_spec, format = "text", n_list, d_spec;
  long long budget = env_budget(20000);
  int jobs = 1, max_degree = 0, subrack_bound = 120;

  auto add_common = [&](CLI::App* sub, bool with_jobs = true) {
    sub->add_option("--format", format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--budget", budget, "symmetrizer budget (theta^cap bound)");
    sub->add_option("--subrack-bound", subrack_bound, "largest class searched for subracks");
    if (with_jobs) sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* classes = app.add_subcommand("classes", "list conjugacy classes of a group");
  classes->add_option("--group", group_spec, "group spec, e.g. An:5 or (An:5)x(Zn:2)")
      ->required();
  add_common(classes, false);

  CLI::App* screen_cmd = app.add_subcommand("screen", "screen one (class, representation) pair");
  screen_cmd->add_option("--group", group_spec)->required();
  screen_cmd->add_option("--class", class_spec, "class representative, e.g. \"(1 2)(3 4)\"")
      ->required();
  screen_cmd->add_option("--rep", rep_spec, "irrep label, e.g. chi:2, sgn⊗ε, rho:5")
      ->required();
  screen_cmd->add_option("--max-degree", max_degree,
                         "confirm finite dimensions by Hilbert prefix up to this degree");
  add_common(screen_cmd, false);

  CLI::App* tabledn = app.add_subcommand("table-dn", "screen every pair over dihedral groups");
  tabledn->add_option("--n", n_list, "comma-separated list, e.g. 5,7,9,11")->required();
  add_common(tabledn);

  CLI::App* scanan = app.add_subcommand("scan-an", "screen every pair over an alternating group");
  scanan->add_option("--n", n_list, "4 <= n <= 8")->required();
  add_common(scanan);

  CLI::App* rackdec = app.add_subcommand("rack-decompose",
                                         "decompose the reflection rack of an odd n-gon");
  rackdec->add_option("--n", n_list, "odd modulus")->required();
  rackdec->add_option("--d", d_spec, "divisor of n")->required();
  add_common(rackdec, false);

  CLI::App* reality = app.add_subcommand("reality", "reality report for a group element");
  reality->add_option("--group", group_spec)->required();
  reality->add_option("--class", class_spec, "element, e.g. \"(1 2 3)\"")->required();
  add_common(reality, false);

  std::vector<std::string> argv = args;
  std::vector<const char*> cargv{"nichols"};
  for (const auto& a : argv) cargv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    out = app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err = std::string("error: ") + e.what() + "\n";
    return 2;
  }

  ScreenOptions opts;
  opts.hilbert_budget = budget;
  opts.jobs = jobs;
  opts.subrack_bound = subrack_bound;

  try {
    if (app.got_subcommand(classes)) {
      FiniteGroup G = parse_group(group_spec);
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      std::ostringstream text;
      text << "classes of " << G.name() << " (order " << G.order() << ")\n";
      for (const auto& cls : all_conjugacy_classes(G)) {
        Subgroup cent = centralizer(G, cls.base());
        nlohmann::ordered_json j;
        j["group"] = G.name();
        j["class_rep"] = G.render(cls.base());
        j["class_size"] = cls.size();
        j["element_order"] = G.element_order(cls.base());
        j["centralizer"] = cent.label;
        j["centralizer_order"] = cent.order();
        arr.push_back(std::move(j));
        text << "  " << G.render(cls.base()) << "  size " << cls.size() << "  |s| "
             << G.element_order(cls.base()) << "  centralizer " << cent.label << "\n";
      }
      if (format == "json") out = arr.dump(2) + "\n";
      else if (format == "csv") {
        std::ostringstream os;
        os << "group,class_rep,class_size,element_order,centralizer,centralizer_order\n";
        for (const auto& j : arr)
          os << j["group"].get<std::string>() << ',' << '"' << j["class_rep"].get<std::string>()
             << '"' << ',' << j["class_size"] << ',' << j["element_order"] << ','
             << j["centralizer"].get<std::string>() << ',' << j["centralizer_order"] << "\n";
        out = os.str();
      } else {
        out = text.str();
      }
      return 0;
    }

    if (app.got_subcommand(screen_cmd)) {
      FiniteGroup G = parse_group(group_spec);
      GroupElement s = G.parse(class_spec);
      if (!G.contains(s)) throw spec_error("class representative not in " + G.name());
      ClassProfile profile = make_class_profile(G, s);
      Irrep rho = find_rep(profile.cent, rep_spec);
      ScreenRow row;
      row.group = G;
      row.class_rep = G.render(s);
      row.class_size = profile.cls.size();
      row.centralizer = profile.cent.label;
      row.rep = rho.label();
      row.verdict = screen(profile, rho, opts);
      nlohmann::ordered_json j = row_to_json(row);
      if (max_degree > 0 && row.verdict.tag == Verdict::Tag::FiniteDim && row.verdict.witness_q) {
        HilbertPrefix hp = nichols_hilbert_prefix(*row.verdict.witness_q, max_degree, budget);
        j["hilbert_prefix"] = hp.dims;
        j["hilbert_total"] = hp.total();
        j["hilbert_terminated"] = hp.terminated();
      }
      if (format == "json") out = j.dump(2) + "\n";
      else if (format == "csv") out = rows_to_csv({row});
      else out = rows_to_text({row});
      return 0;
    }

    if (app.got_subcommand(tabledn)) {
      std::vector<ScreenRow> rows;
      for (int n : parse_n_list(n_list)) {
        auto r = table_dn(n, opts);
        rows.insert(rows.end(), r.begin(), r.end());
      }
      out = format_rows(rows, format);
      return 0;
    }

    if (app.got_subcommand(scanan)) {
      auto ns = parse_n_list(n_list);
      std::vector<ScreenRow> rows;
      for (int n : ns) {
        auto r = scan_an(n, opts);
        rows.insert(rows.end(), r.begin(), r.end());
      }
      out = format_rows(rows, format);
      return 0;
    }

    if (app.got_subcommand(rackdec)) {
      auto ns = parse_n_list(n_list);
      if (ns.size() != 1) throw spec_error("rack-decompose expects a single --n");
      int n = ns[0];
      int d = 0;
      try {
        d = std::stoi(d_spec);
      } catch (const std::exception&) {
        throw spec_error("malformed --d: " + d_spec);
      }
      FiniteGroup G = FiniteGroup::dihedral(n);
      ConjugacyClass O = conjugacy_class(G, GroupElement{DihedralElt{1, 0}});
      auto blocks = rack_decomposition(O, d);
      nlohmann::ordered_json j;
      j["group"] = G.name();
      j["class_rep"] = G.render(O.base());
      j["d"] = d;
      j["blocks"] = nlohmann::ordered_json::array();
      std::ostringstream text;
      text << "reflection rack of " << G.name() << ": " << blocks.size()
           << " blocks, each isomorphic to the reflection rack of Dn:" << d << "\n";
      for (const auto& b : blocks) {
        nlohmann::ordered_json jb = nlohmann::ordered_json::array();
        text << "  {";
        for (size_t k = 0; k < b.size(); ++k) {
          jb.push_back(G.render(O.elems[b[k]]));
          text << (k ? ", " : "") << G.render(O.elems[b[k]]);
        }
        text << "}\n";
        j["blocks"].push_back(std::move(jb));
      }
      out = format == "json" ? j.dump(2) + "\n" : text.str();
      return 0;
    }

    if (app.got_subcommand(reality)) {
      FiniteGroup G = parse_group(group_spec);
      GroupElement s = G.parse(class_spec);
      RealityReport r = reality_report(G, s);
      nlohmann::ordered_json j;
      j["group"] = G.name();
      j["element"] = G.render(s);
      j["element_order"] = element_order(G, s);
      j["is_real"] = r.is_real;
      j["is_absolutely_real"] = r.is_absolutely_real;
      j["inverting_witness"] =
          r.inverting_witness ? nlohmann::ordered_json(G.render(*r.inverting_witness))
                              : nlohmann::ordered_json(nullptr);
      j["involution_witness"] =
          r.involution_witness ? nlohmann::ordered_json(G.render(*r.involution_witness))
                               : nlohmann::ordered_json(nullptr);
      if (format == "json") {
        out = j.dump(2) + "\n";
      } else {
        std::ostringstream text;
        text << G.render(s) << " in " << G.name() << ": "
             << (r.is_real ? (r.is_absolutely_real ? "absolutely real" : "real") : "not real");
        if (r.involution_witness) text << " (involution " << G.render(*r.involution_witness) << ")";
        else if (r.inverting_witness) text << " (witness " << G.render(*r.inverting_witness) << ")";
        text << "\n";
        out = text.str();
      }
      return 0;
    }

    err = "error: no subcommand\n";
    return 2;
  } catch (const budget_error& e) {
    err = std::string("budget exceeded: ") + e.what() + "\n";
    return 3;
  } catch (const spec_error& e) {
    err = std::string("error: ") + e.what() + "\n";
    return 2;
  }
}

}  // namespace nichols
