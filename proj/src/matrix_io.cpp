#include "optemb/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace optemb {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

template <class T>
T parse_number(const std::string& s, int line_no) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  return v;
}

}  // namespace

MatrixFile parse_matrix_file(std::istream& in) {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    lines.emplace_back(no, std::move(toks));
  }
  if (lines.empty()) throw Error(Errc::ParseError, "empty matrix file");
  const auto& header = lines.front();
  if (header.second.size() != 3) throw Error(Errc::ParseError, "header must be 'p f N'");
  const u64 p = parse_number<u64>(header.second[0], header.first);
  const int f = parse_number<int>(header.second[1], header.first);
  const int N = parse_number<int>(header.second[2], header.first);
  std::size_t cursor = 1;
  std::vector<u64> h;
  if (cursor < lines.size() && lines[cursor].second.front() == "h") {
    const auto& toks = lines[cursor].second;
    for (std::size_t i = 1; i < toks.size(); ++i) h.push_back(parse_number<u64>(toks[i], lines[cursor].first));
    ++cursor;
  }
  MatrixFile out;
  out.ring = h.empty() ? Ring::make_default(p, f, N) : Ring::make(p, f, N, h);
  if ((lines.size() - cursor) % 3 != 0 || lines.size() == cursor)
    throw Error(Errc::ParseError, "matrix rows must come in blocks of three");
  for (; cursor < lines.size(); cursor += 3) {
    Mat3L m;
    for (int i = 0; i < 3; ++i) {
      const auto& [no, toks] = lines[cursor + i];
      if (toks.size() != 3) throw Error(Errc::ParseError, "line " + std::to_string(no) + ": expected 3 entries");
      for (int j = 0; j < 3; ++j) {
        std::vector<std::int64_t> coeffs;
        std::stringstream ss(toks[j]);
        for (std::string part; std::getline(ss, part, ',');) coeffs.push_back(parse_number<std::int64_t>(part, no));
        if (static_cast<int>(coeffs.size()) != f)
          throw Error(Errc::ParseError, "line " + std::to_string(no) + ": entry needs " + std::to_string(f) +
                                            " coefficients");
        m(i, j) = LocalElem::from_signed(out.ring, coeffs);
      }
    }
    out.matrices.push_back(m);
  }
  return out;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return parse_matrix_file(in);
}

std::string format_matrix_file(const RingPtr& ring, const std::vector<Mat3L>& matrices) {
  std::ostringstream os;
  os << ring->p() << " " << ring->degree() << " " << ring->precision() << "\n";
  if (ring->degree() > 1) {
    os << "h";
    for (int i = 0; i < ring->degree(); ++i) os << " " << ring->modulus_poly()[i];
    os << "\n";
  }
  for (const auto& m : matrices) {
    os << "\n";
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) os << (j ? " " : "") << m(i, j).to_string();
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace optemb
