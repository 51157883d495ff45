#include "nichols/records.hpp"

#include <array>
#include <sstream>

namespace nichols {

namespace {

nlohmann::ordered_json witness_to_json(const ScreenRow& row) {
  const Verdict& v = row.verdict;
  const FiniteGroup& G = row.group;
  if (v.witness_q) {
    nlohmann::ordered_json w;
    w["kind"] = "subrack";
    if (!v.witness_subrack_elems.empty()) w["points"] = v.witness_subrack_elems;
    w["point_indices"] = v.witness_q->subrack;
    w["eigentag"] = v.witness_q->eigentag;
    w["eigenvector"] = v.witness_q->eigenvector;
    nlohmann::ordered_json q = nlohmann::ordered_json::array();
    for (int i = 0; i < v.witness_q->theta; ++i) {
      nlohmann::ordered_json qr = nlohmann::ordered_json::array();
      for (int j = 0; j < v.witness_q->theta; ++j) qr.push_back(v.witness_q->at(i, j).str());
      q.push_back(std::move(qr));
    }
    w["q_matrix"] = std::move(q);
    if (v.witness_cartan) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (int i = 0; i < v.witness_cartan->theta; ++i) {
        nlohmann::ordered_json ar = nlohmann::ordered_json::array();
        for (int j = 0; j < v.witness_cartan->theta; ++j)
          ar.push_back(v.witness_cartan->at(i, j));
        a.push_back(std::move(ar));
      }
      w["cartan"] = std::move(a);
    }
    return w;
  }
  if (v.power_witness) {
    nlohmann::ordered_json w;
    w["kind"] = "power";
    w["j"] = v.power_witness->j;
    w["sigma"] = G.render(v.power_witness->sigma);
    w["distinct3"] = v.power_witness->distinct3;
    w["square_returns"] = v.power_witness->square_returns;
    return w;
  }
  if (v.reality_witness) {
    nlohmann::ordered_json w;
    w["kind"] = "inverting-element";
    w["element"] = G.render(*v.reality_witness);
    return w;
  }
  return nullptr;
}

std::string csv_quote(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string verdict_summary(const Verdict& v) {
  switch (v.tag) {
    case Verdict::Tag::InfiniteDim: return "InfiniteDim";
    case Verdict::Tag::FiniteDim:
      return "FiniteDim(" + std::to_string(v.dimension.value_or(0)) + ")";
    case Verdict::Tag::Undetermined:
      return v.negative_braiding ? "Undetermined(negative braiding)" : "Undetermined";
  }
  return "?";
}

nlohmann::ordered_json row_to_json(const ScreenRow& row) {
  nlohmann::ordered_json j;
  j["group"] = row.group.name();
  j["class_rep"] = row.class_rep;
  j["class_size"] = row.class_size;
  j["centralizer"] = row.centralizer;
  j["rep"] = row.rep;
  j["q_ss"] = row.verdict.q_ss ? nlohmann::ordered_json(row.verdict.q_ss->str())
                               : nlohmann::ordered_json(nullptr);
  j["verdict"] = row.verdict.tag_str();
  j["dimension"] = row.verdict.dimension ? nlohmann::ordered_json(*row.verdict.dimension)
                                         : nlohmann::ordered_json(nullptr);
  j["reasons"] = row.verdict.reasons;
  j["witness"] = witness_to_json(row);
  j["negative_braiding"] = row.verdict.negative_braiding;
  return j;
}

std::string rows_to_json(const std::vector<ScreenRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) arr.push_back(row_to_json(r));
  return arr.dump(2) + "\n";
}

std::string rows_to_csv(const std::vector<ScreenRow>& rows) {
  std::ostringstream os;
  os << "group,class_rep,class_size,centralizer,rep,q_ss,verdict,dimension,reasons,witness,"
        "negative_braiding\n";
  for (const auto& r : rows) {
    std::string reasons;
    for (size_t i = 0; i < r.verdict.reasons.size(); ++i)
      reasons += (i ? "; " : "") + r.verdict.reasons[i];
    auto w = witness_to_json(r);
    os << csv_quote(r.group.name()) << ',' << csv_quote(r.class_rep) << ',' << r.class_size
       << ',' << csv_quote(r.centralizer) << ',' << csv_quote(r.rep) << ','
       << (r.verdict.q_ss ? r.verdict.q_ss->str() : "") << ',' << r.verdict.tag_str() << ','
       << (r.verdict.dimension ? std::to_string(*r.verdict.dimension) : "") << ','
       << csv_quote(reasons) << ',' << csv_quote(w.is_null() ? "" : w.dump()) << ','
       << (r.verdict.negative_braiding ? "true" : "false") << '\n';
  }
  return os.str();
}

namespace {

// display width = number of code points (labels only use single-width glyphs)
size_t display_width(const std::string& s) {
  size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

}  // namespace

std::string rows_to_text(const std::vector<ScreenRow>& rows) {
  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"class", "size", "centralizer", "rep", "q_ss", "verdict"});
  for (const auto& r : rows) {
    cells.push_back({r.class_rep, std::to_string(r.class_size), r.centralizer, r.rep,
                     r.verdict.q_ss ? r.verdict.q_ss->pretty() : "-",
                     verdict_summary(r.verdict)});
  }
  std::array<size_t, 6> width{};
  for (const auto& c : cells)
    for (size_t k = 0; k < 6; ++k) width[k] = std::max(width[k], display_width(c[k]));
  std::ostringstream os;
  for (size_t i = 0; i < cells.size(); ++i) {
    for (size_t k = 0; k < 6; ++k) {
      os << cells[i][k] << std::string(width[k] - display_width(cells[i][k]) + 2, ' ');
    }
    os << '\n';
    if (i == 0) {
      size_t total = 0;
      for (size_t k = 0; k < 6; ++k) total += width[k] + 2;
      os << std::string(total, '-') << '\n';
    }
  }
  return os.str();
}

}  // namespace nichols
