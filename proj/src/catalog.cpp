#include "hyperid/errors.hpp"
#include "hyperid/identities.hpp"
#include "identity_support.hpp"

#include <cmath>

namespace hyperid {

ParameterSet& ParameterSet::set(std::string name, Complex value) {
  values_.insert_or_assign(std::move(name), std::move(value));
  return *this;
}

ParameterSet& ParameterSet::set_integer(std::string name, long value) {
  integers_.insert_or_assign(std::move(name), value);
  return *this;
}

const Complex& ParameterSet::operator[](std::string_view name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw ConfigError("missing parameter " + std::string(name));
  return it->second;
}

long ParameterSet::integer(std::string_view name) const {
  auto it = integers_.find(name);
  if (it == integers_.end()) throw ConfigError("missing integer parameter " + std::string(name));
  return it->second;
}

bool ParameterSet::has(std::string_view name) const {
  return values_.count(name) != 0 || integers_.count(name) != 0;
}

bool ParameterSet::all_real() const {
  for (const auto& [name, v] : values_) {
    if (!v.is_real()) return false;
  }
  return true;
}

std::vector<std::pair<std::string, std::string>> ParameterSet::to_strings(int digits) const {
  std::map<std::string, std::string> merged;
  for (const auto& [name, v] : values_) merged[name] = v.to_string(digits);
  for (const auto& [name, n] : integers_) merged[name] = std::to_string(n);
  return {merged.begin(), merged.end()};
}

std::optional<std::string> IdentityCase::violated(const ParameterSet& p) const {
  for (const auto& decl : schema) {
    if (!p.has(decl.name)) return "missing parameter " + decl.name;
  }
  for (const auto& c : constraints) {
    if (!c.holds(p)) return c.text;
  }
  return std::nullopt;
}

namespace {

using detail::cplx;
using detail::in_first_poles;
using detail::q_margin;

constexpr double kQMargin = 1e-3;
const Complex one(1);

Complex dy(SampleRng& rng, double lo, double hi) { return Complex(rng.dyadic(lo, hi)); }

// One sample in ten gets imaginary parts in [-1, 1] on a and b.
void maybe_complex(SampleRng& rng, ParameterSet& p, const char* x, const char* y) {
  if (!rng.chance(0.1)) return;
  Complex a = p[x], b = p[y];
  a.im = rng.dyadic(-1, 1);
  b.im = rng.dyadic(-1, 1);
  p.set(x, a).set(y, b);
}

Complex q_draw(SampleRng& rng, long hi = 51) { return Complex(Real(rng.integer(7, hi)) / Real(64)); }

std::vector<ParamDecl> complex_params(std::initializer_list<const char*> names) {
  std::vector<ParamDecl> out;
  for (const char* n : names) out.push_back({n, ParamKind::complex});
  return out;
}

bool none_nonpositive(std::initializer_list<Complex> xs) {
  for (const auto& x : xs) {
    if (x.is_nonpositive_integer()) return false;
  }
  return true;
}

bool is_positive_integer(const Complex& x) { return x.is_positive_integer(); }

double re(const Complex& x) { return x.re.to_double(); }

Constraint q_range() {
  return {"0.1 < q < 0.8", [](const ParameterSet& p) {
            return p["q"].is_real() && re(p["q"]) > 0.1 && re(p["q"]) < 0.8;
          }};
}

IdentityCase saalschuetz_case() {
  IdentityCase c;
  c.id = "saalschuetz";
  c.description = "3F2(a,b,-n; c,1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)";
  c.schema = complex_params({"a", "b", "c"});
  c.schema.push_back({"n", ParamKind::integer});
  c.constraints = {
      {"n >= 0", [](const ParameterSet& p) { return p.integer("n") >= 0; }},
      {"c, 1+a+b-c-n, c-a-b not in {0,-1,...,-(n-1)}",
       [](const ParameterSet& p) {
         const Complex &a = p["a"], &b = p["b"], &cc = p["c"];
         long n = p.integer("n");
         return !in_first_poles(cc, n) && !in_first_poles(one + a + b - cc - Complex(n), n) &&
                !in_first_poles(cc - a - b, n);
       }},
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("a", dy(rng, 0, 4)).set("b", dy(rng, 0, 4)).set("c", dy(rng, 0, 4));
    p.set_integer("n", rng.integer(0, 30));
    maybe_complex(rng, p, "a", "b");
    return p;
  };
  c.evaluate = saalschuetz;
  c.exact = saalschuetz_exact;
  return c;
}

IdentityCase saalschuetz_nt_case() {
  IdentityCase c;
  c.id = "saalschuetz-nt";
  c.description =
      "3F2(a,b,c+d-a-b-1; c,d; 1) = G(c)G(d)/(G(a)G(b)G(c+d-a-b)) / (a+b-c) * 3F2(1,c-a,c-b; c-a-b+1,c+d-a-b; 1)"
      " + G(c)G(d)G(c-a-b)G(d-a-b)/(G(c-a)G(c-b)G(d-a)G(d-b))";
  c.schema = complex_params({"a", "b", "c", "d"});
  c.constraints = {
      {"Re(d-a-b)>0", [](const ParameterSet& p) { return re(p["d"] - p["a"] - p["b"]) > 0; }},
      {"|a+b-c| >= 1e-3", [](const ParameterSet& p) { return abs(p["a"] + p["b"] - p["c"]).to_double() >= 1e-3; }},
      {"Re(d-a-b) >= 1 (sampling margin)", [](const ParameterSet& p) { return re(p["d"] - p["a"] - p["b"]) >= 1; }},
      {"c, d, c-a-b, c-a-b+1 not nonpositive integers", [](const ParameterSet& p) {
         const Complex &a = p["a"], &b = p["b"], &cc = p["c"], &d = p["d"];
         return none_nonpositive({cc, d, cc - a - b, cc - a - b + one});
       }},
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("a", dy(rng, 0, 4)).set("b", dy(rng, 0, 4)).set("c", dy(rng, 0, 4));
    maybe_complex(rng, p, "a", "b");
    Real delta = rng.dyadic(1, 4);
    p.set("d", Complex(p["a"].re + p["b"].re + delta));
    return p;
  };
  c.evaluate = saalschuetz_nonterminating;
  return c;
}

IdentityCase dougall_case() {
  IdentityCase c;
  c.id = "dougall-2h2";
  c.description = "2H2(a,b; c,d; 1) = G(1-a)G(1-b)G(c)G(d)G(c+d-a-b-1) / (G(c-a)G(c-b)G(d-a)G(d-b))";
  c.schema = complex_params({"a", "b", "c", "d"});
  c.constraints = {
      {"Re(c+d-a-b)>1", [](const ParameterSet& p) { return re(p["c"] + p["d"] - p["a"] - p["b"]) > 1; }},
      {"15 <= Re(c+d-a-b) <= 30 (sampling window)",
       [](const ParameterSet& p) {
         double s = re(p["c"] + p["d"] - p["a"] - p["b"]);
         return s >= 15 && s <= 30;
       }},
      {"a, b not positive integers", [](const ParameterSet& p) {
         return !is_positive_integer(p["a"]) && !is_positive_integer(p["b"]);
       }},
      {"c, d, c-a, c-b, d-a, d-b not nonpositive integers", [](const ParameterSet& p) {
         const Complex &a = p["a"], &b = p["b"], &cc = p["c"], &d = p["d"];
         return none_nonpositive({cc, d, cc - a, cc - b, d - a, d - b});
       }},
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("a", dy(rng, 0, 4)).set("b", dy(rng, 0, 4));
    maybe_complex(rng, p, "a", "b");
    Real sigma = rng.dyadic(15, 30);
    Real top = sigma + p["a"].re + p["b"].re;
    Complex cc(rng.dyadic(0.5, top.to_double() - 0.5));
    p.set("c", cc);
    p.set("d", Complex(sigma) + p["a"] + p["b"] - cc);
    return p;
  };
  c.evaluate = dougall_2h2;
  return c;
}

IdentityCase gauss_case() {
  IdentityCase c;
  c.id = "gauss-2f1";
  c.description = "2F1(a,b; c; 1) = G(c)G(c-a-b) / (G(c-a)G(c-b))";
  c.schema = complex_params({"a", "b", "c"});
  c.constraints = {
      {"Re(c-a-b)>0", [](const ParameterSet& p) { return re(p["c"] - p["a"] - p["b"]) > 0; }},
      {"5 <= Re(c-a-b) <= 25 (sampling window)",
       [](const ParameterSet& p) {
         double s = re(p["c"] - p["a"] - p["b"]);
         return s >= 5 && s <= 25;
       }},
      {"c, c-a, c-b not nonpositive integers", [](const ParameterSet& p) {
         const Complex &a = p["a"], &b = p["b"], &cc = p["c"];
         return none_nonpositive({cc, cc - a, cc - b});
       }},
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("a", dy(rng, 0, 4)).set("b", dy(rng, 0, 4));
    maybe_complex(rng, p, "a", "b");
    p.set("c", Complex(p["a"].re + p["b"].re + rng.dyadic(5, 25)));
    return p;
  };
  c.evaluate = gauss_2f1;
  return c;
}

IdentityCase dixon_case() {
  IdentityCase c;
  c.id = "dixon";
  c.description =
      "3F2(a,b,c; 1+a-b,1+a-c; 1) = G(1+a/2)G(1+a-b)G(1+a-c)G(1+a/2-b-c) / (G(1+a)G(1+a/2-b)G(1+a/2-c)G(1+a-b-c))";
  c.schema = complex_params({"a", "b", "c"});
  c.constraints = {
      {"Re(1+a/2-b-c)>0", [](const ParameterSet& p) { return 1 + re(p["a"]) / 2 - re(p["b"]) - re(p["c"]) > 0; }},
      {"Re(1+a/2-b-c) >= 5 (sampling margin)",
       [](const ParameterSet& p) { return 1 + re(p["a"]) / 2 - re(p["b"]) - re(p["c"]) >= 5; }},
      {"1+a-b, 1+a-c, 1+a, 1+a/2-b, 1+a/2-c, 1+a-b-c not nonpositive integers", [](const ParameterSet& p) {
         const Complex &a = p["a"], &b = p["b"], &cc = p["c"];
         const Complex h = detail::half(a);
         return none_nonpositive({one + a - b, one + a - cc, one + a, one + h - b, one + h - cc, one + a - b - cc});
       }},
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("a", dy(rng, 0, 16)).set("b", dy(rng, -4, 4)).set("c", dy(rng, -4, 4));
    maybe_complex(rng, p, "a", "b");
    return p;
  };
  c.evaluate = dixon;
  return c;
}

Constraint phi_poles_constraint() {
  return {"a, b, c, d, a+b+c+d-1 and the pairwise sums not nonpositive integers", [](const ParameterSet& p) {
            const Complex &a = p["a"], &b = p["b"], &cc = p["c"], &d = p["d"];
            return none_nonpositive({a, b, cc, d, a + b + cc + d - one, a + b + cc, a + b + d, a + cc + d, b + cc + d,
                                     a + cc, a + d, b + cc, b + d});
          }};
}

ParameterSet draw_abcd(SampleRng& rng) {
  ParameterSet p;
  p.set("a", dy(rng, 0, 3)).set("b", dy(rng, 0, 3)).set("c", dy(rng, 0, 3)).set("d", dy(rng, 0, 3));
  maybe_complex(rng, p, "a", "b");
  return p;
}

IdentityCase theorem_case() {
  IdentityCase c;
  c.id = "theorem-1";
  c.description =
      "Phi(a,b;c,d) + Phi(c,d;a,b) = G(a)G(b)G(c)G(d)G(a+b+c+d-1) / (G(a+c)G(a+d)G(b+c)G(b+d)), "
      "Phi(a,b;c,d) = sum_k G(a+k)G(b+k)G(a+b+c+d-1+k) / (G(1+k)G(a+b+c+k)G(a+b+d+k))";
  c.schema = complex_params({"a", "b", "c", "d"});
  c.constraints = {phi_poles_constraint()};
  c.draw = draw_abcd;
  c.evaluate = symmetric_theorem;
  return c;
}

IdentityCase ca_db_case() {
  IdentityCase c;
  c.id = "theorem-1-ca-db";
  c.description = "3F2(a,b,2a+2b-1; a+2b,2a+b; 1) = G(a)G(b)G(a+2b)G(2a+b) / (2 G(2a)G(2b)G(a+b)^2)";
  c.schema = complex_params({"a", "b"});
  c.constraints = {
      {"Re(a)>0, Re(b)>0", [](const ParameterSet& p) { return re(p["a"]) > 0 && re(p["b"]) > 0; }},
      {"2a+2b-1 not a nonpositive integer", [](const ParameterSet& p) {
         const Complex two(2);
         return none_nonpositive({two * p["a"] + two * p["b"] - one});
       }},
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("a", dy(rng, 0, 3)).set("b", dy(rng, 0, 3));
    maybe_complex(rng, p, "a", "b");
    return p;
  };
  c.evaluate = theorem_special_ca_db;
  return c;
}

IdentityCase b_neg_n_case() {
  IdentityCase c;
  c.id = "theorem-1-b-neg-n";
  c.description = "3F2(a,a+c+d-1-n,-n; a+c-n,a+d-n; 1) = (1-c)_n (1-d)_n / ((1-a-c)_n (1-a-d)_n)";
  c.schema = complex_params({"a", "c", "d"});
  c.schema.push_back({"n", ParamKind::integer});
  c.constraints = {
      {"n >= 0", [](const ParameterSet& p) { return p.integer("n") >= 0; }},
      {"a+c-n, a+d-n, 1-a-c, 1-a-d not in {0,-1,...,-(n-1)}", [](const ParameterSet& p) {
         const Complex &a = p["a"], &cc = p["c"], &d = p["d"];
         long n = p.integer("n");
         const Complex nn(n);
         return !in_first_poles(a + cc - nn, n) && !in_first_poles(a + d - nn, n) &&
                !in_first_poles(one - a - cc, n) && !in_first_poles(one - a - d, n);
       }},
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("a", dy(rng, 0, 4)).set("c", dy(rng, 0, 4)).set("d", dy(rng, 0, 4));
    p.set_integer("n", rng.integer(0, 20));
    maybe_complex(rng, p, "a", "c");
    return p;
  };
  c.evaluate = theorem_special_b_neg_n;
  c.exact = theorem_special_b_neg_n_exact;
  return c;
}

IdentityCase phi_as_3f2_case() {
  IdentityCase c;
  c.id = "phi-as-3f2";
  c.description = "Phi(c,d;a,b) = 3F2(1,a+d,b+d; 1+d,a+b+c+d; 1) / (d (a+b+c+d-1))";
  c.schema = complex_params({"a", "b", "c", "d"});
  c.constraints = {
      {"Re(c)>0", [](const ParameterSet& p) { return re(p["c"]) > 0; }},
      {"Re(c) >= 5 (sampling margin)", [](const ParameterSet& p) { return re(p["c"]) >= 5; }},
      {"d (a+b+c+d-1) != 0", [](const ParameterSet& p) {
         return !(p["d"] * (p["a"] + p["b"] + p["c"] + p["d"] - one)).is_zero();
       }},
      phi_poles_constraint(),
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("a", dy(rng, 0, 3)).set("b", dy(rng, 0, 3)).set("c", dy(rng, 5, 9)).set("d", dy(rng, 0, 3));
    maybe_complex(rng, p, "a", "b");
    return p;
  };
  c.evaluate = phi_as_3f2_identity;
  return c;
}

IdentityCase h22_split_case() {
  IdentityCase c;
  c.id = "h22-split";
  c.description = "c d (Phi(c,d;a,b) + Phi(a,b;c,d)) = 2H2(1-a,1-b; 1+c,1+d; 1)";
  c.schema = complex_params({"a", "b", "c", "d"});
  c.constraints = {
      {"Re(a+b+c+d)>1", [](const ParameterSet& p) { return re(p["a"] + p["b"] + p["c"] + p["d"]) > 1; }},
      {"Re(a+b+c+d) >= 1.5 (sampling margin)",
       [](const ParameterSet& p) { return re(p["a"] + p["b"] + p["c"] + p["d"]) >= 1.5; }},
      {"a, b, c, d != 0", [](const ParameterSet& p) {
         return !p["a"].is_zero() && !p["b"].is_zero() && !p["c"].is_zero() && !p["d"].is_zero();
       }},
      phi_poles_constraint(),
  };
  c.draw = draw_abcd;
  c.evaluate = h22_split_identity;
  return c;
}

Constraint margin_constraint(std::vector<cplx> (*factors)(const ParameterSet&), long n = -1) {
  return {"q-shifted factors of parameters and brackets stay 1e-3 away from zero",
          [factors, n](const ParameterSet& p) {
            long count = n;
            if (p.has("n")) count = p.integer("n");
            return q_margin(factors(p), detail::to_cplx(p["q"]), count) >= kQMargin;
          }};
}

IdentityCase bailey_case() {
  IdentityCase c;
  c.id = "bailey-6psi6";
  c.description =
      "6psi6(q sqrt(a),-q sqrt(a),b,c,d,e; sqrt(a),-sqrt(a),qa/b,qa/c,qa/d,qa/e; q, qa^2/bcde) = "
      "[q,qa,q/a,qa/bc,qa/bd,qa/be,qa/cd,qa/ce,qa/de; q/b,q/c,q/d,q/e,qa/b,qa/c,qa/d,qa/e,qa^2/bcde]_inf";
  c.schema = complex_params({"a", "b", "c", "d", "e", "q"});
  c.constraints = {
      q_range(),
      {"|qa^2/bcde|<1", [](const ParameterSet& p) {
         return abs(p["q"] * p["a"] * p["a"] / (p["b"] * p["c"] * p["d"] * p["e"])).to_double() < 1;
       }},
      {"|qa^2/bcde| <= 0.8 (sampling margin)", [](const ParameterSet& p) {
         return abs(p["q"] * p["a"] * p["a"] / (p["b"] * p["c"] * p["d"] * p["e"])).to_double() <= 0.8;
       }},
      margin_constraint(detail::bailey_6psi6_factors),
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("q", q_draw(rng));
    for (const char* n : {"a", "b", "c", "d", "e"}) p.set(n, dy(rng, 0.25, 4));
    return p;
  };
  c.evaluate = [](const ParameterSet& p, const PrecisionContext& ctx) { return bailey_6psi6(p, ctx); };
  return c;
}

IdentityCase phi65_case() {
  IdentityCase c;
  c.id = "phi65";
  c.description =
      "6phi5(a,q sqrt(a),-q sqrt(a),b,c,d; sqrt(a),-sqrt(a),qa/b,qa/c,qa/d; q, qa/bcd) = "
      "[qa,qa/bc,qa/bd,qa/cd; qa/b,qa/c,qa/d,qa/bcd]_inf";
  c.schema = complex_params({"a", "b", "c", "d", "q"});
  c.constraints = {
      q_range(),
      {"|qa/bcd|<1",
       [](const ParameterSet& p) { return abs(p["q"] * p["a"] / (p["b"] * p["c"] * p["d"])).to_double() < 1; }},
      {"|qa/bcd| <= 0.8 (sampling margin)",
       [](const ParameterSet& p) { return abs(p["q"] * p["a"] / (p["b"] * p["c"] * p["d"])).to_double() <= 0.8; }},
      margin_constraint(detail::phi65_factors),
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("q", q_draw(rng));
    for (const char* n : {"a", "b", "c", "d"}) p.set(n, dy(rng, 0.25, 4));
    return p;
  };
  c.evaluate = [](const ParameterSet& p, const PrecisionContext& ctx) { return phi65(p, ctx); };
  return c;
}

IdentityCase jackson_case() {
  IdentityCase c;
  c.id = "jackson-8phi7";
  c.description =
      "8phi7(a,q sqrt(a),-q sqrt(a),b,c,d,q^(1+n)a^2/bcd,q^-n; sqrt(a),-sqrt(a),qa/b,qa/c,qa/d,q^-n bcd/a,q^(1+n)a; q, q)"
      " = [qa,qa/bc,qa/bd,qa/cd; qa/b,qa/c,qa/d,qa/bcd]_n";
  c.schema = complex_params({"a", "b", "c", "d", "q"});
  c.schema.push_back({"n", ParamKind::integer});
  c.constraints = {
      {"n >= 0", [](const ParameterSet& p) { return p.integer("n") >= 0; }},
      q_range(),
      {"a != 1", [](const ParameterSet& p) { return p["a"] != one; }},
      margin_constraint(detail::jackson_8phi7_factors),
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("q", q_draw(rng));
    for (const char* n : {"a", "b", "c", "d"}) p.set(n, dy(rng, 0.25, 4));
    p.set_integer("n", rng.integer(0, 15));
    return p;
  };
  c.evaluate = [](const ParameterSet& p, const PrecisionContext& ctx) { return jackson_8phi7(p, ctx); };
  c.exact = jackson_8phi7_exact;
  return c;
}

IdentityCase jackson_nt_case() {
  IdentityCase c;
  c.id = "jackson-nt";
  c.description =
      "8phi7(a; b,c,d,e,f; q, q) = (b/a) [qa,c,d,e,f,qb/a,qb/c,qb/d,qb/e,qb/f; qa/b,qa/c,qa/d,qa/e,qa/f,bc/a,bd/a,be/a,"
      "bf/a,b^2q/a]_inf 8phi7(b^2/a; b,bc/a,bd/a,be/a,bf/a; q, q) + [qa,b/a,qa/cd,qa/ce,qa/cf,qa/de,qa/df,qa/ef; "
      "qa/c,qa/d,qa/e,qa/f,bc/a,bd/a,be/a,bf/a]_inf, with f = qa^2/bcde";
  c.schema = complex_params({"a", "b", "c", "d", "e", "q"});
  c.constraints = {
      {"0.1 < q < 0.7", [](const ParameterSet& p) {
         return p["q"].is_real() && re(p["q"]) > 0.1 && re(p["q"]) < 0.7;
       }},
      {"1e-2 <= |f| <= 100 with f = qa^2/bcde", [](const ParameterSet& p) {
         double f = abs(p["q"] * p["a"] * p["a"] / (p["b"] * p["c"] * p["d"] * p["e"])).to_double();
         return f >= 1e-2 && f <= 100;
       }},
      margin_constraint(detail::jackson_nt_factors),
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("q", q_draw(rng, 44));
    for (const char* n : {"a", "b", "c", "d", "e"}) p.set(n, dy(rng, 0.25, 4));
    return p;
  };
  c.evaluate = [](const ParameterSet& p, const PrecisionContext& ctx) { return jackson_nonterminating(p, ctx); };
  return c;
}

IdentityCase split_case(std::string id, std::string description,
                        IdentityPair (*fn)(const ParameterSet&, const PrecisionContext&, RootBranch)) {
  IdentityCase c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.schema = complex_params({"a", "c", "d", "e", "f", "q"});
  c.constraints = {
      q_range(),
      {"|qa^2/cdef|<1", [](const ParameterSet& p) {
         return abs(p["q"] * p["a"] * p["a"] / (p["c"] * p["d"] * p["e"] * p["f"])).to_double() < 1;
       }},
      {"|qa^2/cdef| <= 0.8 (sampling margin)", [](const ParameterSet& p) {
         return abs(p["q"] * p["a"] * p["a"] / (p["c"] * p["d"] * p["e"] * p["f"])).to_double() <= 0.8;
       }},
      {"|1-1/c|, |1-1/d|, |1-1/e|, |1-1/f| >= 1e-3", [](const ParameterSet& p) {
         for (const char* n : {"c", "d", "e", "f"}) {
           if (std::abs(1.0 - 1.0 / detail::to_cplx(p[n])) < kQMargin) return false;
         }
         return true;
       }},
      margin_constraint(detail::split_factors),
  };
  c.draw = [](SampleRng& rng) {
    ParameterSet p;
    p.set("q", q_draw(rng));
    p.set("a", dy(rng, 0.25, 4));
    for (const char* n : {"c", "d", "e", "f"}) p.set(n, dy(rng, 0.5, 3));
    return p;
  };
  c.evaluate = [fn](const ParameterSet& p, const PrecisionContext& ctx) { return fn(p, ctx, RootBranch::principal); };
  return c;
}

std::vector<IdentityCase> build() {
  std::vector<IdentityCase> out;
  out.push_back(saalschuetz_case());
  out.push_back(saalschuetz_nt_case());
  out.push_back(dougall_case());
  out.push_back(gauss_case());
  out.push_back(dixon_case());
  out.push_back(theorem_case());
  out.push_back(ca_db_case());
  out.push_back(b_neg_n_case());
  out.push_back(phi_as_3f2_case());
  out.push_back(h22_split_case());
  out.push_back(bailey_case());
  out.push_back(phi65_case());
  out.push_back(jackson_case());
  out.push_back(jackson_nt_case());
  out.push_back(split_case("omega",
                           "sum_k>=0 [q sqrt(A),-q sqrt(A),cde/a,cdf/a,cef/a,def/a; sqrt(A),-sqrt(A),qf,qe,qd,qc]_k "
                           "(qa^2/cdef)^k = [q,qa/c,qa/d,qa/e,qa/f,qcdef/a; qa,qc,qd,qe,qf,qa^2/cdef]_inf "
                           "8phi7(a; qa^2/cdef,c,d,e,f; q, q), A = cdef/a",
                           omega_sum));
  out.push_back(split_case("theta",
                           "P sum_k>=0 [q^2 sqrt(B),-q^2 sqrt(B),q/c,q/d,q/e,q/f; q sqrt(B),-q sqrt(B),q^2a/def,"
                           "q^2a/cef,q^2a/cdf,q^2a/cde]_k (qa^2/cdef)^k = P [q,q^3a/cdef,q^2a^2/c^2def,"
                           "q^2a^2/cd^2ef,q^2a^2/cde^2f,q^2a^2/cdef^2; q^2a/cde,q^2a/cdf,q^2a/cef,q^2a/def,"
                           "qa^2/cdef,q^3a^3/c^2d^2e^2f^2]_inf 8phi7(q^2a^3/c^2d^2e^2f^2; qa^2/cdef,qa/cde,qa/cdf,"
                           "qa/cef,qa/def; q, q), B = a/cdef, P = (qa^2/cdef)(1-q^2a/cdef)(1-1/c)(1-1/d)(1-1/e)"
                           "(1-1/f) / ((1-a/cdef)(1-qa/cde)(1-qa/cdf)(1-qa/cef)(1-qa/def))",
                           theta_sum));
  out.push_back(split_case("bailey-split",
                           "[q,qa/cd,qa/ce,qa/cf,qa/de,qa/df,qa/ef,qa/cdef,qcdef/a; qc,qd,qe,qf,qa/cde,qa/cdf,"
                           "qa/cef,qa/def,qa^2/cdef]_inf = Omega + Theta (the k >= 0 and reflected k < 0 halves of "
                           "6psi6(q sqrt(A),-q sqrt(A),cde/a,cdf/a,cef/a,def/a; sqrt(A),-sqrt(A),qf,qe,qd,qc; q, "
                           "qa^2/cdef))",
                           bailey_split));
  return out;
}

}  // namespace

const std::vector<IdentityCase>& catalog() {
  static const std::vector<IdentityCase> cases = build();
  return cases;
}

const IdentityCase& find_case(std::string_view id) {
  for (const auto& c : catalog()) {
    if (c.id == id) return c;
  }
  throw ConfigError("unknown identity " + std::string(id));
}

}  // namespace hyperid
