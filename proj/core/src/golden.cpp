#include "quasipolar/golden.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace quasipolar {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view field, int base = 10) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value, base);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw std::invalid_argument("malformed golden field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string mask_hex(Mask mask, int n) {
  char buffer[17];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, mask, 16);
  (void)ec;
  std::string digits(buffer, end);
  const auto width = static_cast<std::size_t>((n + 3) / 4);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return digits;
}

GoldenFile make_golden(Modulus n, GroupKind kind, std::span<const CanonicalClass> strong,
                       const Rational& cota) {
  GoldenFile file{n.n(), std::string(to_string(kind)), strong.size(), cota.num(), cota.den(), {}};
  for (const CanonicalClass& c : strong) {
    if (!c.strength.polarity) throw std::invalid_argument("class without a polarity");
    const auto affine = as_affine(*c.strength.polarity);
    if (!affine) {
      throw std::invalid_argument("polarity " + to_string(*c.strength.polarity) + " is not affine");
    }
    file.entries.push_back({c.representative.mask(), c.orbit_size, affine->u(), affine->v()});
  }
  std::sort(file.entries.begin(), file.entries.end(),
            [](const GoldenEntry& a, const GoldenEntry& b) { return a.mask < b.mask; });
  return file;
}

std::string format_golden(const GoldenFile& file) {
  std::ostringstream os;
  os << file.n << ',' << file.group << ',' << file.count << ',' << file.cota_num << ','
     << file.cota_den << '\n';
  for (const GoldenEntry& e : file.entries) {
    os << mask_hex(e.mask, static_cast<int>(file.n)) << ',' << e.orbit_size << ',' << e.polarity_u
       << ',' << e.polarity_v << '\n';
  }
  return os.str();
}

GoldenFile parse_golden(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("empty golden file");

  const auto header = split(lines.front(), ',');
  if (header.size() != 5) throw std::invalid_argument("golden header needs 5 fields");
  GoldenFile file{parse_int<std::int64_t>(header[0]), std::string(header[1]),
                  parse_int<std::size_t>(header[2]), parse_int<std::int64_t>(header[3]),
                  parse_int<std::int64_t>(header[4]), {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    if (fields.size() != 4) throw std::invalid_argument("golden row needs 4 fields");
    file.entries.push_back({parse_int<Mask>(fields[0], 16), parse_int<std::size_t>(fields[1]),
                            parse_int<std::int64_t>(fields[2]), parse_int<std::int64_t>(fields[3])});
  }
  if (file.entries.size() != file.count) {
    throw std::invalid_argument("golden count " + std::to_string(file.count) + " but " +
                                std::to_string(file.entries.size()) + " rows");
  }
  return file;
}

}  // namespace quasipolar
