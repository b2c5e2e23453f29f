#include "hindman/bounds.hpp"

#include <bit>
#include <limits>
#include <sstream>

namespace hindman {

struct ExtNat::Node {
  Kind kind = Kind::Exact;
  BigNat num;  // Exact value, or Pow base
  OracleKind okind = OracleKind::U;
  std::shared_ptr<const Node> a, b;
};

ExtNat::ExtNat() : ExtNat(exact(BigNat(0))) {}

ExtNat ExtNat::exact(BigNat v) {
  if (v < 0) throw DomainError("ExtNat values are naturals");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exact;
  n->num = std::move(v);
  return ExtNat(std::move(n));
}

ExtNat ExtNat::sum(ExtNat a, ExtNat b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->a = std::move(a.node_);
  n->b = std::move(b.node_);
  return ExtNat(std::move(n));
}

ExtNat ExtNat::pow(BigNat base, ExtNat exp) {
  if (base < 1) throw DomainError("pow base must be positive");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->num = std::move(base);
  n->a = std::move(exp.node_);
  return ExtNat(std::move(n));
}

ExtNat ExtNat::oracle(OracleKind kind, ExtNat n_arg, ExtNat c_arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Oracle;
  n->okind = kind;
  n->a = std::move(n_arg.node_);
  n->b = std::move(c_arg.node_);
  return ExtNat(std::move(n));
}

ExtNat::Kind ExtNat::kind() const { return node_->kind; }

bool ExtNat::is_exact() const { return node_->kind == Kind::Exact; }

const BigNat& ExtNat::value() const {
  if (node_->kind != Kind::Exact) throw StateError("ExtNat is not exact");
  return node_->num;
}

const BigNat& ExtNat::base() const {
  if (node_->kind != Kind::Pow) throw StateError("ExtNat is not a power");
  return node_->num;
}

ExtNat::OracleKind ExtNat::oracle_kind() const {
  if (node_->kind != Kind::Oracle) throw StateError("ExtNat is not an oracle leaf");
  return node_->okind;
}

ExtNat ExtNat::child(int i) const {
  const auto& ptr = (i == 0) ? node_->a : node_->b;
  if (ptr == nullptr) throw StateError("ExtNat node has no such child");
  return ExtNat(ptr);
}

bool ExtNat::operator==(const ExtNat& other) const {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Kind::Exact:
      return x->num == y->num;
    case Kind::Sum:
      return ExtNat(x->a) == ExtNat(y->a) && ExtNat(x->b) == ExtNat(y->b);
    case Kind::Pow:
      return x->num == y->num && ExtNat(x->a) == ExtNat(y->a);
    case Kind::Oracle:
      return x->okind == y->okind && ExtNat(x->a) == ExtNat(y->a) &&
             ExtNat(x->b) == ExtNat(y->b);
  }
  return false;
}

std::string ExtNat::str() const {
  switch (node_->kind) {
    case Kind::Exact:
      return node_->num.str();
    case Kind::Sum:
      return "(+ " + ExtNat(node_->a).str() + " " + ExtNat(node_->b).str() + ")";
    case Kind::Pow:
      return "(pow " + node_->num.str() + " " + ExtNat(node_->a).str() + ")";
    case Kind::Oracle:
      return std::string(node_->okind == OracleKind::U ? "(u " : "(hind ") +
             ExtNat(node_->a).str() + " " + ExtNat(node_->b).str() + ")";
  }
  return {};
}

std::uint64_t least_n0(std::uint64_t m) {
  if (m == 0) throw DomainError("least_n0(0)");
  if (m == 1) return 0;
  return std::bit_width(m - 1);
}

namespace {

bool fits_u64(const BigNat& v) {
  return v >= 0 && v <= BigNat(std::numeric_limits<std::uint64_t>::max());
}

// Settles one oracle leaf. `force` is used for k*, which must materialize for
// the recursion to unroll at all; otherwise Symbolic fallback leaves misses
// alone. Throws BudgetError when a search fallback cannot finish.
std::optional<BigNat> resolve_oracle(OracleTable& t, ExtNat::OracleKind kind,
                                     const BigNat& n, const BigNat& c,
                                     bool force) {
  auto& table = kind == ExtNat::OracleKind::U ? t.u_entries : t.hind_entries;
  if (fits_u64(n) && fits_u64(c)) {
    auto it = table.find({static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(c)});
    if (it != table.end()) return BigNat(it->second);
  }
  if (t.fallback != OracleFallback::ExactSearch && !force) return std::nullopt;

  // Pigeonhole identities: one color admits exactly n singleton blocks, and a
  // single block is trivially monochromatic.
  if (c == 1) return n;
  if (n == 1) return BigNat(1);

  if (!fits_u64(n) || !fits_u64(c) ||
      c > BigNat(std::numeric_limits<std::uint32_t>::max()) || n > BigNat(16)) {
    throw BudgetError("oracle arguments beyond desk-scale search");
  }
  const auto nn = static_cast<std::uint64_t>(n);
  const auto cc = static_cast<std::uint32_t>(c);
  SearchOutcome out = kind == ExtNat::OracleKind::U
                          ? compute_u(nn, cc, t.search_budget)
                          : compute_hind(nn, cc, t.search_budget);
  if (out.status != SearchStatus::Exact) {
    throw BudgetError(std::string(kind == ExtNat::OracleKind::U ? "U(" : "Hind(") +
                      std::to_string(nn) + "," + std::to_string(cc) +
                      ") search exhausted its budget (known >= " +
                      std::to_string(out.value) + ")");
  }
  table[{nn, cc}] = out.value;
  return BigNat(out.value);
}

ExtNat eval_node(const ExtNat& x, OracleTable& t, std::uint64_t bit_budget,
                 bool force_oracles) {
  switch (x.kind()) {
    case ExtNat::Kind::Exact:
      return x;
    case ExtNat::Kind::Sum: {
      ExtNat a = eval_node(x.child(0), t, bit_budget, force_oracles);
      ExtNat b = eval_node(x.child(1), t, bit_budget, force_oracles);
      if (a.is_exact() && b.is_exact()) return ExtNat::exact(a.value() + b.value());
      if (a.is_exact() && a.value() == 0) return b;
      if (b.is_exact() && b.value() == 0) return a;
      return ExtNat::sum(std::move(a), std::move(b));
    }
    case ExtNat::Kind::Pow: {
      const BigNat& base = x.base();
      ExtNat e = eval_node(x.child(0), t, bit_budget, force_oracles);
      if (base == 1) return ExtNat::exact(BigNat(1));
      if (e.is_exact()) {
        const BigNat& ev = e.value();
        // msb(base)+1 bits per factor bounds the result size.
        const std::uint64_t base_bits = boost::multiprecision::msb(base) + 1;
        if (fits_u64(ev) &&
            static_cast<std::uint64_t>(ev) <= bit_budget / base_bits) {
          const auto exp = static_cast<std::uint64_t>(ev);
          if (base == 2) return ExtNat::exact(BigNat(1) << exp);
          return ExtNat::exact(boost::multiprecision::pow(
              base, static_cast<unsigned>(exp)));
        }
      }
      return ExtNat::pow(base, std::move(e));
    }
    case ExtNat::Kind::Oracle: {
      ExtNat n = eval_node(x.child(0), t, bit_budget, force_oracles);
      ExtNat c = eval_node(x.child(1), t, bit_budget, force_oracles);
      if (n.is_exact() && c.is_exact()) {
        auto v = resolve_oracle(t, x.oracle_kind(), n.value(), c.value(),
                                force_oracles);
        if (v) return ExtNat::exact(std::move(*v));
      }
      return ExtNat::oracle(x.oracle_kind(), std::move(n), std::move(c));
    }
  }
  throw StateError("unreachable ExtNat kind");
}

}  // namespace

ExtNat eval(const ExtNat& x, OracleTable& oracles, std::uint64_t bit_budget) {
  if (bit_budget < 64) throw InputError("bit budget must be at least 64");
  return eval_node(x, oracles, bit_budget, false);
}

BoundTrace spencer_bound(std::uint64_t m, std::uint64_t p, std::uint32_t c,
                         OracleTable& oracles, std::uint64_t bit_budget) {
  if (m == 0 || p == 0 || c == 0) throw InputError("parameters must be positive");
  if (bit_budget < 64) throw InputError("bit budget must be at least 64");

  BoundTrace trace;
  trace.m = m;
  trace.p = p;
  trace.c = c;

  // k* = Hind(p+1, c) has to materialize whatever the fallback mode is.
  BigNat kstar_big;
  try {
    auto v = resolve_oracle(oracles, ExtNat::OracleKind::Hind, BigNat(p) + 1,
                            BigNat(c), true);
    kstar_big = *v;  // force-resolution either returns or throws
  } catch (const BudgetError& e) {
    throw OracleBudgetError(std::string("k* unresolved: ") + e.what(), trace);
  }
  if (kstar_big > 64) throw OracleBudgetError("k* too large to unroll", trace);
  const auto k_star = static_cast<std::uint64_t>(kstar_big);
  trace.k_star = ExtNat::exact(kstar_big);

  ExtNat prefix_all = ExtNat::exact(BigNat(least_n0(m)));  // n_0 + ... + n_i
  ExtNat prefix_tail = ExtNat::exact(BigNat(0));           // n_1 + ... + n_i
  trace.n_seq.push_back(prefix_all);

  try {
    for (std::uint64_t i = 0; i <= k_star; ++i) {
      ExtNat m_i = eval(ExtNat::pow2(prefix_all), oracles, bit_budget);
      trace.m_seq.push_back(m_i);
      if (i == k_star) break;
      ExtNat alpha_i = eval(
          ExtNat::pow2(ExtNat::sum(ExtNat::exact(BigNat(k_star - i - 1)),
                                   prefix_tail)),
          oracles, bit_budget);
      trace.alpha_seq.push_back(alpha_i);
      ExtNat c_pow = eval(ExtNat::pow(BigNat(c), alpha_i), oracles, bit_budget);
      ExtNat n_next =
          eval(ExtNat::oracle(ExtNat::OracleKind::U, m_i, c_pow), oracles,
               bit_budget);
      trace.n_seq.push_back(n_next);
      prefix_all = eval(ExtNat::sum(prefix_all, n_next), oracles, bit_budget);
      prefix_tail = eval(ExtNat::sum(prefix_tail, n_next), oracles, bit_budget);
    }
    trace.bound_paper =
        eval(ExtNat::pow2(trace.n_seq[k_star]), oracles, bit_budget);
    trace.bound_operative = trace.m_seq[k_star];
  } catch (const BudgetError& e) {
    throw OracleBudgetError(e.what(), trace);
  }
  return trace;
}

std::string render(const BoundTrace& trace) {
  std::ostringstream out;
  out << "spencer-bound m=" << trace.m << " p=" << trace.p << " c=" << trace.c
      << "\n";
  out << "k*=" << trace.k_star.str() << "\n";
  for (std::size_t i = 0; i < trace.n_seq.size(); ++i) {
    out << "n[" << i << "]=" << trace.n_seq[i].str() << "\n";
  }
  for (std::size_t i = 0; i < trace.m_seq.size(); ++i) {
    out << "m[" << i << "]=" << trace.m_seq[i].str() << "\n";
  }
  for (std::size_t i = 0; i < trace.alpha_seq.size(); ++i) {
    out << "alpha[" << i << "]=" << trace.alpha_seq[i].str() << "\n";
  }
  out << "bound_paper=" << trace.bound_paper.str() << "\n";
  out << "bound_operative=" << trace.bound_operative.str() << "\n";
  return out.str();
}

}  // namespace hindman
