#include "cpgame/normal_form.hpp"

#include <nlohmann/json.hpp>

#include "cpgame/errors.hpp"

namespace cpgame {

std::string normal_form_to_json(const NormalForm& nf) {
  nlohmann::ordered_json doc;
  doc["dims"] = nf.strategy_counts;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const Rational& value : nf.payoffs) {
    entries.push_back(value.str());
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string normal_form_to_csv(const NormalForm& nf) {
  if (nf.strategy_counts.size() != 2) {
    throw ValidationError("CSV export is defined for two-player games only");
  }
  const std::uint64_t rows = nf.strategy_counts[0];
  const std::uint64_t cols = nf.strategy_counts[1];
  std::string out;
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::uint64_t c = 0; c < cols; ++c) {
      if (c > 0) out += ',';
      out += nf.payoffs[r * cols + c].str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace cpgame
