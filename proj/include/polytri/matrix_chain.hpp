#pragma once

/**
 * Matrix-chain multiplication as polygon triangulation.
 *
 * A chain of n matrices with dims p0..pn maps to the (n+1)-node polygon
 * with clockwise weights p0..pn. Matrix Ai corresponds to side (i-1, i)
 * and side (0, n) to the whole product, so the triangle {0, m, n} on the
 * closing side is the outermost multiplication (A1..Am)(Am+1..An).
 */

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "polytri/core.hpp"

namespace polytri {

class ChainDims {
 public:
  explicit ChainDims(std::vector<Weight> dims) : dims_(std::move(dims)) {
    if (dims_.size() < 2) throw InvalidInput("matrix chain needs at least 2 dimensions");
    for (Weight d : dims_) {
      if (d == 0) throw InvalidInput("matrix dimensions must be positive");
    }
  }

  const std::vector<Weight>& dims() const { return dims_; }
  std::size_t matrix_count() const { return dims_.size() - 1; }

 private:
  std::vector<Weight> dims_;
};

/// The polygon of the chain; nullopt for a single matrix, which costs nothing.
inline std::optional<Polygon> chain_to_polygon(const ChainDims& chain) {
  if (chain.matrix_count() < 2) return std::nullopt;
  return Polygon(chain.dims());
}

namespace detail {

struct SplitTree {
  std::vector<std::vector<Node>> adj;
  explicit SplitTree(const ChainDims& chain, const Triangulation& tri) {
    std::size_t n = chain.dims().size();
    if (n < 3) {
      if (!tri.edges.empty()) throw InvalidTriangulation("single matrix admits no edges");
      return;
    }
    if (auto report = validate_triangulation(n, tri.edges); !report) throw InvalidTriangulation(report.detail);
    adj = adjacency(n, tri.edges);
  }
  Node split(Node i, Node j) const { return apex_inside(adj, i, j); }
};

}  // namespace detail

/// Fully parenthesized product text, e.g. "((A1 A2) A3)".
inline std::string triangulation_to_parenthesization(const ChainDims& chain, const Triangulation& tri) {
  detail::SplitTree tree(chain, tri);
  const Node last = static_cast<Node>(chain.matrix_count());
  if (last == 1) return "A1";
  std::string out;
  // Explicit stack: interval frames, or a pending literal (")" or " ").
  struct Frame {
    Node i, j;
    const char* literal;
  };
  std::vector<Frame> stack{{0, last, nullptr}};
  while (!stack.empty()) {
    Frame top = stack.back();
    stack.pop_back();
    if (top.literal) {
      out += top.literal;
      continue;
    }
    if (top.j - top.i == 1) {
      out += "A" + std::to_string(top.j);
      continue;
    }
    Node m = tree.split(top.i, top.j);
    out += '(';
    stack.push_back({0, 0, ")"});
    stack.push_back({m, top.j, nullptr});
    stack.push_back({0, 0, " "});
    stack.push_back({top.i, m, nullptr});
  }
  return out;
}

/// Scalar multiplications of the parenthesization read off `tri`.
inline Cost parenthesization_cost(const ChainDims& chain, const Triangulation& tri) {
  detail::SplitTree tree(chain, tri);
  const auto& p = chain.dims();
  Cost total = 0;
  std::vector<std::pair<Node, Node>> pending{{0, static_cast<Node>(chain.matrix_count())}};
  while (!pending.empty()) {
    auto [i, j] = pending.back();
    pending.pop_back();
    if (j - i < 2) continue;
    Node m = tree.split(i, j);
    Cost product = checked::mul(checked::mul(static_cast<Cost>(p[i]), static_cast<Cost>(p[m])), static_cast<Cost>(p[j]));
    total = checked::add(total, product);
    pending.push_back({i, m});
    pending.push_back({m, j});
  }
  return total;
}

/// Chain text format: "n" (matrix count) then n+1 dims.
inline ChainDims read_chain(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) throw ParseError("chain: missing matrix count");
  if (n < 1) throw ParseError("chain: matrix count must be at least 1, got " + std::to_string(n));
  std::vector<Weight> dims;
  for (long long i = 0; i <= n; ++i) {
    std::string token;
    if (!(in >> token)) throw ParseError("chain: expected " + std::to_string(n + 1) + " dims, got " + std::to_string(i));
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("chain: dim '" + token + "' is not a positive integer");
    }
    Weight d = 0;
    try {
      d = std::stoull(token);
    } catch (const std::exception&) {
      throw ParseError("chain: dim '" + token + "' out of range");
    }
    if (d == 0) throw ParseError("chain: dim '" + token + "' is not a positive integer");
    dims.push_back(d);
  }
  std::string extra;
  if (in >> extra) throw ParseError("chain: trailing data '" + extra + "'");
  return ChainDims(std::move(dims));
}

inline void write_chain(std::ostream& out, const ChainDims& chain) {
  out << chain.matrix_count() << '\n';
  for (std::size_t i = 0; i < chain.dims().size(); ++i) out << (i ? " " : "") << chain.dims()[i];
  out << '\n';
}

}  // namespace polytri
