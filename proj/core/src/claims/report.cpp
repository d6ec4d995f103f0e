#include "transcert/claims/report.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

namespace transcert::claims {

namespace {

nlohmann::json optional_interval(const std::optional<CInterval>& z) {
  return z ? interval_json(*z) : nlohmann::json(nullptr);
}

std::string show(const CInterval& z) {
  const int d = display_digits(z.precision());
  return z.is_real() ? z.re().to_string(d) : z.to_string(d);
}

std::string verdict_line(const Report& r) {
  std::string s = to_string(r.verdict.kind);
  if (r.verdict.within) s += "(" + r.verdict.within->to_decimal(6, Round::Up) + ")";
  return s;
}

}  // namespace

std::optional<bool> Report::agrees_with_assertion() const {
  if (!asserted) return std::nullopt;
  if (verdict.kind == *asserted) return true;
  return *asserted == VerdictKind::CertifiedTrue && verdict.kind == VerdictKind::ConsistentWithin;
}

int display_digits(long precision) {
  return static_cast<int>(std::ceil(static_cast<double>(precision) * 0.30102999566398120)) + 1;
}

nlohmann::json interval_json(const RInterval& x) {
  const int d = display_digits(x.precision());
  return nlohmann::json::array({x.lo().to_decimal(d, Round::Down), x.hi().to_decimal(d, Round::Up)});
}

nlohmann::json interval_json(const CInterval& z) { return {{"re", interval_json(z.re())}, {"im", interval_json(z.im())}}; }

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["name"] = r.name;
  j["statement"] = r.statement;
  j["anchor"] = r.anchor;
  j["verdict"] = to_string(r.verdict.kind);
  j["within"] = r.verdict.within ? nlohmann::json(r.verdict.within->to_decimal(17, Round::Up)) : nlohmann::json(nullptr);
  j["asserted"] = r.asserted ? nlohmann::json(to_string(*r.asserted)) : nlohmann::json(nullptr);
  const auto agrees = r.agrees_with_assertion();
  j["agrees_with_assertion"] = agrees ? nlohmann::json(*agrees) : nlohmann::json(nullptr);
  j["lhs"] = optional_interval(r.verdict.lhs);
  j["rhs"] = optional_interval(r.verdict.rhs);
  j["precision"] = r.verdict.precision_used;
  j["runtime_ms"] = r.runtime_ms ? nlohmann::json(*r.runtime_ms) : nlohmann::json(nullptr);
  j["enclosures"] = nlohmann::json::array();
  for (const auto& e : r.enclosures) {
    nlohmann::json item = interval_json(e.value);
    item["name"] = e.name;
    j["enclosures"].push_back(std::move(item));
  }
  j["notes"] = r.notes;
  if (r.table) {
    j["table"] = {{"columns", r.table->columns}, {"rows", r.table->rows}};
  } else {
    j["table"] = nullptr;
  }
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.id << " " << r.name << ": " << verdict_line(r);
  if (r.asserted) {
    os << "  (source asserts " << to_string(*r.asserted) << (*r.agrees_with_assertion() ? ", agrees" : ", DISAGREES")
       << ")";
  }
  os << "\n  statement: " << r.statement << "\n";
  if (r.verdict.lhs) os << "  lhs: " << show(*r.verdict.lhs) << "\n";
  if (r.verdict.rhs) os << "  rhs: " << show(*r.verdict.rhs) << "\n";
  os << "  precision: " << r.verdict.precision_used << " bits\n";
  for (const auto& e : r.enclosures) os << "  " << e.name << ": " << show(e.value) << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  if (r.table) {
    os << "  table:";
    for (const auto& c : r.table->columns) os << " " << c;
    os << "\n";
    for (const auto& row : r.table->rows) {
      os << "   ";
      for (const auto& cell : row) os << " " << cell;
      os << "\n";
    }
  }
  if (r.runtime_ms) os << "  runtime: " << *r.runtime_ms << " ms\n";
  return os.str();
}

std::string to_markdown(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << "| id | claim | verdict | source asserts | precision |\n";
  os << "|----|-------|---------|----------------|-----------|\n";
  for (const auto& r : reports) {
    os << "| " << r.id << " | " << r.name << " | " << verdict_line(r) << " | ";
    if (r.asserted) {
      os << to_string(*r.asserted) << (*r.agrees_with_assertion() ? "" : " (disagrees)");
    } else {
      os << "-";
    }
    os << " | " << r.verdict.precision_used << " |\n";
  }
  for (const auto& r : reports) {
    os << "\n### " << r.id << " " << r.name << "\n\n" << r.statement << "\n\n";
    if (r.verdict.lhs) os << "- lhs: `" << show(*r.verdict.lhs) << "`\n";
    if (r.verdict.rhs) os << "- rhs: `" << show(*r.verdict.rhs) << "`\n";
    for (const auto& e : r.enclosures) os << "- " << e.name << ": `" << show(e.value) << "`\n";
    for (const auto& n : r.notes) os << "- note: " << n << "\n";
    if (r.table) {
      os << "\n|";
      for (const auto& c : r.table->columns) os << " " << c << " |";
      os << "\n|";
      for (std::size_t k = 0; k < r.table->columns.size(); ++k) os << "---|";
      os << "\n";
      for (const auto& row : r.table->rows) {
        os << "|";
        for (const auto& cell : row) os << " " << cell << " |";
        os << "\n";
      }
    }
  }
  return os.str();
}

}  // namespace transcert::claims
