#include "sclaw/profile.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "sclaw/errors.hpp"

namespace sclaw {

bool Box::contains(const std::vector<double>& x) const {
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (!(lower[j] <= x[j] && x[j] <= upper[j])) return false;
  }
  return true;
}

Box Box::translated(int axis, double offset) const {
  Box out = *this;
  out.lower[static_cast<std::size_t>(axis)] += offset;
  out.upper[static_cast<std::size_t>(axis)] += offset;
  return out;
}

double Box::volume() const {
  double v = 1.0;
  for (std::size_t j = 0; j < lower.size(); ++j) v *= upper[j] - lower[j];
  return v;
}

std::size_t PlanarProfile::locate(double m) const {
  if (pieces.empty() || !(m >= pieces.front().left) || !(m < end)) return pieces.size();
  auto it = std::upper_bound(pieces.begin(), pieces.end(), m,
                             [](double v, const Piece& p) { return v < p.left; });
  return static_cast<std::size_t>(it - pieces.begin()) - 1;
}

double PlanarProfile::piece_value(std::size_t i, double m) const {
  const Piece& p = pieces[i];
  if (p.kind == PieceKind::Constant) return p.value;
  if (!flux) throw ConstructionError("fan piece evaluated without an effective flux");
  if (!(time > 0.0)) throw ConstructionError("fan piece in a profile at time 0");
  const double u = flux->inverse_slope((m - p.center) / time);
  return std::clamp(u, std::min(p.value, p.right_value), std::max(p.value, p.right_value));
}

double PlanarProfile::value_at(double m) const {
  const std::size_t i = locate(m);
  return i == pieces.size() ? 0.0 : piece_value(i, m);
}

double PlanarProfile::integrate(double a, double b) const {
  if (b < a) return -integrate(b, a);
  double total = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const double lo = std::max(a, pieces[i].left);
    const double hi = std::min(b, right_of(i));
    if (!(hi > lo)) continue;
    const Piece& p = pieces[i];
    if (p.kind == PieceKind::Constant) {
      total += p.value * (hi - lo);
      continue;
    }
    // With eta = g'(u) and m = center + t*eta: int u dm = t [u g'(u) - g(u)].
    auto legendre = [&](double m) {
      const double eta = (m - p.center) / time;
      const double u = piece_value(i, m);
      return u * eta - flux->value(u);
    };
    total += time * (legendre(hi) - legendre(lo));
  }
  return total;
}

bool PlanarProfile::all_constant() const {
  return std::all_of(pieces.begin(), pieces.end(), [](const Piece& p) { return p.kind == PieceKind::Constant; });
}

double PlanarProfile::min_value() const {
  double v = 0.0;
  for (const auto& p : pieces) v = std::min({v, p.value, p.right_value});
  return v;
}

double PlanarProfile::max_value() const {
  double v = 0.0;
  for (const auto& p : pieces) v = std::max({v, p.value, p.right_value});
  return v;
}

int PlanarProfile::dominant_axis() const {
  int a = 0;
  for (int j = 1; j < dimension(); ++j) {
    if (std::abs(direction[static_cast<std::size_t>(j)]) > std::abs(direction[static_cast<std::size_t>(a)])) a = j;
  }
  return a;
}

double PlanarProfile::cross_section() const {
  const int a = dominant_axis();
  double c = 1.0;
  for (int j = 0; j < dimension(); ++j) {
    if (j == a) continue;
    const auto k = static_cast<std::size_t>(j);
    c *= inner.upper[k] - inner.lower[k];
  }
  return c / std::abs(direction[static_cast<std::size_t>(a)]);
}

void PlanarProfile::check_invariants() const {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!(right_of(i) > pieces[i].left)) {
      std::ostringstream os;
      os << "breakpoints not increasing at piece " << i << " (m = " << pieces[i].left << ")";
      throw ConstructionError(os.str());
    }
    if (pieces[i].kind == PieceKind::Fan && !(pieces[i].right_value > pieces[i].value)) {
      throw ConstructionError("fan piece must increase from left to right state");
    }
  }
}

void merge_equal_constants(PlanarProfile& profile) {
  std::vector<Piece> out;
  for (const auto& p : profile.pieces) {
    if (!out.empty() && p.kind == PieceKind::Constant && out.back().kind == PieceKind::Constant &&
        out.back().value == p.value) {
      continue;
    }
    out.push_back(p);
  }
  profile.pieces = std::move(out);
}

namespace {

template <class Seq>
void write_row(std::ostream& os, const char* key, const Seq& values) {
  os << "# " << key;
  for (auto v : values) os << ' ' << v;
  os << '\n';
}

std::string tag_text(long tag) {
  if (tag == kTailTag) return "tail";
  return std::to_string(tag);
}

long parse_tag(const std::string& s) {
  if (s == "tail") return kTailTag;
  return std::stol(s);
}

std::vector<double> parse_doubles(std::istringstream& in) {
  std::vector<double> out;
  std::string tok;
  while (in >> tok) out.push_back(std::stod(tok));
  return out;
}

}  // namespace

void write_profile(std::ostream& os, const PlanarProfile& profile) {
  const auto old_precision = os.precision(17);
  os << "# sclaw planar profile\n";
  write_row(os, "direction", profile.direction);
  os << "# time " << profile.time << '\n';
  os << "# end " << profile.end << '\n';
  write_row(os, "support_lower", profile.support.lower);
  write_row(os, "support_upper", profile.support.upper);
  write_row(os, "inner_lower", profile.inner.lower);
  write_row(os, "inner_upper", profile.inner.upper);
  write_row(os, "planar_axes", profile.planar_axes);
  for (const auto& [k, v] : profile.header) os << "# param " << k << ' ' << v << '\n';
  os << "# m_left kind value right_value center tag\n";
  for (const auto& p : profile.pieces) {
    os << p.left << ' ' << (p.kind == PieceKind::Constant ? "const" : "fan") << ' ' << p.value << ' '
       << p.right_value << ' ' << p.center << ' ' << tag_text(p.tag) << '\n';
  }
  os.precision(old_precision);
}

PlanarProfile read_profile(std::istream& is, std::shared_ptr<const EffectiveFlux> flux) {
  PlanarProfile out;
  out.flux = std::move(flux);
  std::string line;
  int line_no = 0;
  try {
    while (std::getline(is, line)) {
      ++line_no;
      if (line.empty()) continue;
      if (line[0] == '#') {
        std::istringstream in(line.substr(1));
        std::string key;
        in >> key;
        if (key == "direction") out.direction = parse_doubles(in);
        else if (key == "time") out.time = parse_doubles(in).at(0);
        else if (key == "end") out.end = parse_doubles(in).at(0);
        else if (key == "support_lower") out.support.lower = parse_doubles(in);
        else if (key == "support_upper") out.support.upper = parse_doubles(in);
        else if (key == "inner_lower") out.inner.lower = parse_doubles(in);
        else if (key == "inner_upper") out.inner.upper = parse_doubles(in);
        else if (key == "planar_axes") {
          int a;
          while (in >> a) out.planar_axes.push_back(a);
        } else if (key == "param") {
          std::string k, v;
          in >> k;
          std::getline(in >> std::ws, v);
          out.header.emplace_back(k, v);
        }
        continue;
      }
      std::istringstream in(line);
      std::string left, kind, value, right, center, tag;
      if (!(in >> left >> kind >> value >> right >> center >> tag)) throw DomainError("short row");
      Piece p;
      p.left = std::stod(left);
      if (kind == "const") p.kind = PieceKind::Constant;
      else if (kind == "fan") p.kind = PieceKind::Fan;
      else throw DomainError("unknown piece kind '" + kind + "'");
      p.value = std::stod(value);
      p.right_value = std::stod(right);
      p.center = std::stod(center);
      p.tag = parse_tag(tag);
      out.pieces.push_back(p);
    }
  } catch (const std::exception& e) {
    throw DomainError("profile line " + std::to_string(line_no) + ": " + e.what());
  }
  out.check_invariants();
  return out;
}

}  // namespace sclaw
