#include "eta/lattice.hpp"

#include <charconv>
#include <queue>
#include <set>

#include "eta/errors.hpp"

namespace eta {

LatticeSpec::LatticeSpec(std::vector<int> dims, Boundary boundary)
    : dims_(std::move(dims)), boundary_(boundary) {
  if (dims_.empty()) throw ValidationError("lattice needs at least one axis");
  sites_ = 1;
  for (int d : dims_) {
    if (d < 1) throw ValidationError("lattice extents must be positive");
    if (sites_ > 1024 / d) throw CapacityError("lattice too large");
    sites_ *= d;
  }
  std::set<std::pair<int, int>> bonds;
  for (int s = 0; s < sites_; ++s) {
    std::vector<int> x = coordinates(s);
    int stride = 1;
    for (std::size_t a = dims_.size(); a-- > 0;) {
      const int ext = dims_[a];
      int nb = -1;
      if (x[a] + 1 < ext) {
        nb = s + stride;
      } else if (boundary_ == Boundary::periodic && ext > 1) {
        nb = s - x[a] * stride;
      }
      if (nb >= 0 && nb != s) bonds.emplace(std::min(s, nb), std::max(s, nb));
      stride *= ext;
    }
  }
  edges_.assign(bonds.begin(), bonds.end());
}

LatticeSpec LatticeSpec::parse(std::string_view text) {
  Boundary b = Boundary::open;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    std::string_view tag = text.substr(colon + 1);
    if (tag == "open") {
      b = Boundary::open;
    } else if (tag == "periodic") {
      b = Boundary::periodic;
    } else {
      throw ValidationError("unknown boundary '" + std::string(tag) + "'");
    }
    text = text.substr(0, colon);
  }
  std::vector<int> dims;
  while (true) {
    auto x = text.find('x');
    std::string_view part = text.substr(0, x);
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw ValidationError("bad lattice extent '" + std::string(part) + "'");
    }
    dims.push_back(v);
    if (x == std::string_view::npos) break;
    text = text.substr(x + 1);
  }
  return LatticeSpec(std::move(dims), b);
}

std::string LatticeSpec::to_string() const {
  std::string s;
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    if (a) s += 'x';
    s += std::to_string(dims_[a]);
  }
  s += boundary_ == Boundary::periodic ? ":periodic" : ":open";
  return s;
}

std::vector<int> LatticeSpec::coordinates(int site) const {
  std::vector<int> x(dims_.size());
  for (std::size_t a = dims_.size(); a-- > 0;) {
    x[a] = site % dims_[a];
    site /= dims_[a];
  }
  return x;
}

bool LatticeSpec::bipartite() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(sites_));
  for (auto [a, b] : edges_) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> color(static_cast<std::size_t>(sites_), -1);
  for (int s = 0; s < sites_; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        auto& cv = color[static_cast<std::size_t>(v)];
        const int cu = color[static_cast<std::size_t>(u)];
        if (cv < 0) {
          cv = 1 - cu;
          q.push(v);
        } else if (cv == cu) {
          return false;
        }
      }
    }
  }
  return true;
}

int LatticeSpec::parity_sign(int site) const {
  int sum = 0;
  for (int v : coordinates(site)) sum += v;
  return sum % 2 == 0 ? 1 : -1;
}

}  // namespace eta
