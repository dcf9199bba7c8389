#include "icc/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace icc {

namespace {

void require_pair_alphabet(const Alphabet& alphabet, const char* what) {
  if (!alphabet.is_product() || alphabet.arity() != 2) {
    throw InputError(std::string(what) + " must be over a product alphabet A x B");
  }
}

template <typename P>
void require_protocol_alphabets(const P& p) {
  if (!(p.z.alphabet() == p.c)) throw InputError("Z must be over the message alphabet C");
  if (!(p.sx.alphabet() == Alphabet::product(p.a, p.c))) throw InputError("S_X must be over A x C");
  if (!(p.sy.alphabet() == Alphabet::product(p.b, p.c))) throw InputError("S_Y must be over B x C");
}

std::vector<Symbol> identity_map(std::size_t n) {
  std::vector<Symbol> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Symbol>(i);
  return m;
}

SftPresentation window_one(const Alphabet& alphabet, const std::function<bool(Symbol)>& allowed) {
  std::vector<Word> words;
  for (Symbol s = 0; s < alphabet.size(); ++s) {
    if (allowed(s)) words.push_back({s});
  }
  return SftPresentation::from_allowed_words(alphabet, 1, std::move(words));
}

SftPresentation pair_diagonal(const Alphabet& a) {
  const Alphabet pair = Alphabet::product(a, a);
  return window_one(pair, [&](Symbol s) { return pair.component(s, 0) == pair.component(s, 1); });
}

}  // namespace

SoficProtocol to_sofic(const ProtocolTriple& p) {
  return {p.a, p.b, p.c, sofic_from_sft(p.z), sofic_from_sft(p.sx), sofic_from_sft(p.sy)};
}

ProtocolLanguage protocol_language(const ProtocolTriple& p, std::size_t guard) {
  require_protocol_alphabets(p);
  const Alphabet abc = Alphabet::product({p.a, p.b, p.c});
  ProtocolLanguage out;
  out.l = intersect_constraints(abc,
                                {{&p.z, component_map(abc, 2)},
                                 {&p.sx, factor_map(abc, {0, 2}, p.sx.alphabet())},
                                 {&p.sy, factor_map(abc, {1, 2}, p.sy.alphabet())}},
                                guard);
  out.r = out.l.window();
  return out;
}

SoficPresentation protocol_language(const SoficProtocol& p, std::size_t guard) {
  require_protocol_alphabets(p);
  const Alphabet abc = Alphabet::product({p.a, p.b, p.c});
  return intersect_sofic(abc,
                         {{&p.z, component_map(abc, 2)},
                          {&p.sx, factor_map(abc, {0, 2}, p.sx.alphabet())},
                          {&p.sy, factor_map(abc, {1, 2}, p.sy.alphabet())}},
                         guard);
}

ValidationReport protocol_validate(const SftPresentation& s, const ProtocolTriple& p, double tol, std::size_t guard) {
  if (!(s.alphabet() == Alphabet::product(p.a, p.b))) throw InputError("S must be over A x B of the protocol");
  const ProtocolLanguage lang = protocol_language(p, guard);
  ValidationReport out;
  out.witness = distinguishing_word(project(lang.l, {0, 1}), sofic_from_sft(s), guard);
  out.valid = !out.witness.has_value();
  out.entropy_z = entropy(p.z, tol);
  return out;
}

ValidationReport protocol_validate(const SoficPresentation& s, const SoficProtocol& p, double tol,
                                   std::size_t guard) {
  if (!(s.alphabet() == Alphabet::product(p.a, p.b))) throw InputError("S must be over A x B of the protocol");
  const SoficPresentation lang = protocol_language(p, guard);
  ValidationReport out;
  out.witness = distinguishing_word(project(lang, {0, 1}), s, guard);
  out.valid = !out.witness.has_value();
  out.entropy_z = entropy(p.z, tol);
  return out;
}

SftPresentation diagonal_shift(const SftPresentation& t) {
  const Alphabet pair = Alphabet::product(t.alphabet(), t.alphabet());
  const SftPresentation diag = pair_diagonal(t.alphabet());
  return intersect_constraints(pair, {{&t, component_map(pair, 0)}, {&diag, identity_map(pair.size())}});
}

SoficPresentation diagonal_shift(const SoficPresentation& t) {
  const Alphabet pair = Alphabet::product(t.alphabet(), t.alphabet());
  std::vector<Symbol> map(t.alphabet().size());
  for (Symbol s = 0; s < map.size(); ++s) map[s] = pair.combine(std::vector<Symbol>{s, s});
  return t.relabel(pair, map);
}

ProtocolTriple eq_protocol(const SftPresentation& t) {
  if (t.empty()) throw InputError("eq_protocol needs a nonempty shift");
  const Alphabet& a = t.alphabet();
  return {a, a, a, t, pair_diagonal(a), pair_diagonal(a)};
}

SoficProtocol eq_protocol(const SoficPresentation& t) {
  if (t.empty()) throw InputError("eq_protocol needs a nonempty shift");
  const Alphabet& a = t.alphabet();
  const SoficPresentation diag = sofic_from_sft(pair_diagonal(a));
  return {a, a, a, t, diag, diag};
}

ProtocolTriple trivial_protocol(const SftPresentation& x, const SftPresentation& y) {
  const Alphabet c(std::vector<std::string>{"*"});
  const SftPresentation z = full_shift(c);
  return {x.alphabet(), y.alphabet(), c, z, product_shift(x, z), product_shift(y, z)};
}

SftPresentation relation_shift(const RelationMatrix& r) {
  const Alphabet pair = Alphabet::product(Alphabet(r.x_labels()), Alphabet(r.y_labels()));
  return window_one(pair, [&](Symbol s) { return r.at(pair.component(s, 0), pair.component(s, 1)); });
}

SftPresentation leq_shift() {
  RelationMatrix leq(std::vector<std::string>{"0", "1"}, std::vector<std::string>{"0", "1"});
  leq.set(0, 0);
  leq.set(0, 1);
  leq.set(1, 1);
  return relation_shift(leq);
}

ProtocolTriple lift_protocol(const RelationMatrix& r, const std::vector<Rectangle>& cover, int n) {
  if (n < 1) throw InputError("lift needs n >= 1");
  const RelationMatrix rn = tensor_power(r, n);
  if (cover.empty()) throw InputError("cover has no rectangles");
  if (auto defect = cover_defect(rn, cover)) throw InputError("not a cover of R^n: " + *defect);
  const std::size_t m = cover.size();
  std::vector<std::string> tokens;
  for (std::size_t k = 0; k < m; ++k) tokens.push_back("z" + std::to_string(k));
  tokens.push_back("_");
  const Alphabet c(tokens);
  const Symbol blank = static_cast<Symbol>(m);
  const std::size_t window = static_cast<std::size_t>(n);

  const auto marker_count_ok = [&](auto message_at, std::size_t len) {
    std::size_t markers = 0;
    for (std::size_t i = 0; i < len; ++i) markers += message_at(i) != blank;
    return len == window ? markers == 1 : markers <= 1;
  };

  ProtocolTriple out;
  out.a = Alphabet(r.x_labels());
  out.b = Alphabet(r.y_labels());
  out.c = c;
  out.z = SftPresentation::from_extension_check(c, n, [&](WordView p) {
    return marker_count_ok([&](std::size_t i) { return p[i]; }, p.size());
  });

  // side 0 reads rectangle rows, side 1 columns
  const auto side = [&](const Alphabet& base, int which) {
    const Alphabet pair = Alphabet::product(base, c);
    std::vector<std::vector<char>> member(m);
    const std::size_t span = which == 0 ? rn.x_size() : rn.y_size();
    for (std::size_t k = 0; k < m; ++k) {
      member[k].assign(span, 0);
      for (std::size_t v : which == 0 ? cover[k].rows : cover[k].cols) member[k][v] = 1;
    }
    return SftPresentation::from_extension_check(pair, n, [&, pair](WordView p) {
      if (!marker_count_ok([&](std::size_t i) { return pair.component(p[i], 1); }, p.size())) return false;
      if (p.size() < window) return true;
      const Symbol head = pair.component(p[0], 1);
      if (head == blank) return true;
      std::size_t index = 0;
      for (std::size_t i = 0; i < window; ++i) index = index * base.size() + pair.component(p[i], 0);
      return member[head][index] != 0;
    });
  };
  out.sx = side(out.a, 0);
  out.sy = side(out.b, 1);
  return out;
}

ExtractedProtocol extract_protocol(const ProtocolTriple& p, const RelationMatrix& r, int n, std::size_t guard) {
  if (!(p.a == Alphabet(r.x_labels())) || !(p.b == Alphabet(r.y_labels()))) {
    throw InputError("protocol alphabets must be the relation's row and column labels");
  }
  const ProtocolLanguage lang = protocol_language(p, guard);
  if (n < lang.r) {
    throw InputError("extraction needs n >= r = " + std::to_string(lang.r) + ", got n = " + std::to_string(n));
  }
  const RelationMatrix rn = tensor_power(r, n, guard);
  const std::size_t len = static_cast<std::size_t>(n), r_len = static_cast<std::size_t>(lang.r);
  ExtractedProtocol out;
  out.n = n;
  out.r = lang.r;
  out.c_n = count_words(p.z, len);
  out.bits = log2_count(out.c_n) + 4.0 * std::log2(static_cast<double>(lang.r));

  const auto decode = [len](std::size_t index, std::size_t base) {
    Word w(len);
    for (std::size_t i = len; i-- > 0;) {
      w[i] = static_cast<Symbol>(index % base);
      index /= base;
    }
    return w;
  };
  using Border = std::pair<Word, Word>;
  // inputs compatible with z on one side, grouped by their first and last r letters
  const auto side = [&](const SftPresentation& shift, const Word& z, std::size_t base, std::size_t count) {
    std::map<Border, std::vector<std::size_t>> groups;
    Word paired(len);
    for (std::size_t v = 0; v < count; ++v) {
      const Word x = decode(v, base);
      for (std::size_t i = 0; i < len; ++i) paired[i] = shift.alphabet().combine(std::vector<Symbol>{x[i], z[i]});
      if (!shift.admits(paired)) continue;
      groups[{Word(x.begin(), x.begin() + static_cast<long>(r_len)), Word(x.end() - static_cast<long>(r_len), x.end())}]
          .push_back(v);
    }
    return groups;
  };
  const Alphabet& abc = lang.l.alphabet();
  const auto border_ok = [&](const Word& xs, const Word& ys, const Word& z, std::size_t from) {
    Word t(r_len);
    for (std::size_t i = 0; i < r_len; ++i) t[i] = abc.combine(std::vector<Symbol>{xs[i], ys[i], z[from + i]});
    return lang.l.admits(t);
  };

  std::set<Rectangle> rects;
  for (const Word& z : p.z.words(len, guard)) {
    const auto gx = side(p.sx, z, p.a.size(), rn.x_size());
    const auto gy = side(p.sy, z, p.b.size(), rn.y_size());
    for (const auto& [bx, rows] : gx) {
      for (const auto& [by, cols] : gy) {
        if (!border_ok(bx.first, by.first, z, 0) || !border_ok(bx.second, by.second, z, len - r_len)) continue;
        ++out.messages;
        rects.insert(Rectangle{rows, cols});
      }
    }
  }
  out.rectangles.assign(rects.begin(), rects.end());
  out.sound = true;
  std::vector<char> hit(rn.x_size() * rn.y_size(), 0);
  for (const auto& rect : out.rectangles) {
    for (std::size_t x : rect.rows) {
      for (std::size_t y : rect.cols) {
        out.sound = out.sound && rn.at(x, y);
        hit[x * rn.y_size() + y] = 1;
      }
    }
  }
  out.complete = true;
  for (auto [x, y] : rn.ones()) out.complete = out.complete && hit[x * rn.y_size() + y];
  if (!out.sound || !out.complete) {
    out.defect = out.rectangles.empty() ? std::optional<std::string>("no message is accepted")
                                        : cover_defect(rn, out.rectangles);
  }
  return out;
}

EntropyValue conditional_entropy(const SftPresentation& s, const PeriodicWord& x, double tol) {
  require_pair_alphabet(s.alphabet(), "S");
  if (x.cycle.empty()) throw InputError("periodic word needs a nonempty cycle");
  const Alphabet& ab = s.alphabet();
  const std::size_t a_size = ab.factors()[0].size();
  for (Symbol sym : x.cycle) {
    if (sym >= a_size) throw InputError("periodic word symbol outside A");
  }
  const std::size_t v = s.vertices().size();
  const std::size_t p = x.period();
  // product of per-position transfer matrices restricted to x_j
  std::vector<std::vector<double>> prod(v, std::vector<double>(v, 0.0));
  for (std::size_t i = 0; i < v; ++i) prod[i][i] = 1.0;
  std::vector<std::vector<double>> next(v, std::vector<double>(v));
  for (std::size_t j = 0; j < p; ++j) {
    for (auto& row : next) std::fill(row.begin(), row.end(), 0.0);
    for (const auto& e : s.edges()) {
      if (ab.component(e.label, 0) != x.cycle[j]) continue;
      for (std::size_t i = 0; i < v; ++i) next[i][e.to] += prod[i][e.from];
    }
    prod.swap(next);
  }
  const SpectralBracket rho =
      spectral_radius(NonnegativeMatrix::from_dense(prod), tol * static_cast<double>(p));
  if (rho.upper <= 0.0) throw InputError("periodic word does not occur in the projection of S");
  const double lo = std::max(rho.lower, 1.0), hi = std::max(rho.upper, lo);
  const double scale = static_cast<double>(p);
  return EntropyValue::from_bracket(std::log2(lo) / scale, std::log2(hi) / scale);
}

ConditionalReport conditional_entropy_sup(const SftPresentation& s, int max_period, double tol, std::size_t guard) {
  require_pair_alphabet(s.alphabet(), "S");
  if (max_period < 1) throw InputError("max period must be >= 1");
  if (s.empty()) throw InputError("S is empty");
  const std::size_t q = s.alphabet().factors()[0].size();
  ConditionalReport out;
  out.estimate = -std::numeric_limits<double>::infinity();
  for (int p = 1; p <= max_period; ++p) {
    Word cycle(static_cast<std::size_t>(p), 0);
    while (true) {
      if (++out.cycles_checked > guard) throw GuardError("periodic enumeration exceeded the guard");
      try {
        const double h = conditional_entropy(s, {cycle}, tol).bits();
        if (h > out.estimate) {
          out.estimate = h;
          out.argmax = {cycle};
        }
      } catch (const InputError&) {
        // inadmissible cycle
      }
      std::size_t i = cycle.size();
      while (i > 0 && ++cycle[i - 1] == q) cycle[--i] = 0;
      if (i == 0) break;
    }
  }
  out.h_y = entropy(project(s, {1}), tol);
  out.bound_estimate = out.h_y.bits() - out.estimate;
  return out;
}

namespace {

FoolingReport finish_fooling(EntropyValue h_f, EntropyValue h_cross, double tol) {
  FoolingReport out;
  out.h_f = h_f;
  out.h_cross = h_cross;
  out.certified = !h_f.is_negative_infinity() && h_cross.bits() <= h_f.bits() + 2 * tol;
  out.bound = out.certified ? h_f.bits() : 0.0;
  return out;
}

}  // namespace

FoolingReport fooling_certificate(const SftPresentation& s, const SftPresentation& f, double tol, std::size_t guard) {
  require_pair_alphabet(s.alphabet(), "S");
  if (!(s.alphabet() == f.alphabet())) throw InputError("F and S need the same alphabet");
  if (!sofic_equal(sofic_from_sft(f), sofic_from_sft(intersect(f, s)), guard)) {
    throw InputError("F is not contained in S");
  }
  const Alphabet& ab = s.alphabet();
  const Alphabet abab = Alphabet::product({ab.factors()[0], ab.factors()[1], ab.factors()[0], ab.factors()[1]});
  const SftPresentation cross = intersect_constraints(abab,
                                                      {{&f, factor_map(abab, {0, 1}, ab)},
                                                       {&f, factor_map(abab, {2, 3}, ab)},
                                                       {&s, factor_map(abab, {0, 3}, ab)},
                                                       {&s, factor_map(abab, {2, 1}, ab)}},
                                                      guard);
  return finish_fooling(entropy(f, tol), entropy(cross, tol), tol);
}

FoolingReport fooling_certificate(const SoficPresentation& s, const SoficPresentation& f, double tol,
                                  std::size_t guard) {
  require_pair_alphabet(s.alphabet(), "S");
  if (!(s.alphabet() == f.alphabet())) throw InputError("F and S need the same alphabet");
  const Alphabet& ab = s.alphabet();
  const std::vector<Symbol> id = identity_map(ab.size());
  if (!sofic_equal(f, intersect_sofic(ab, {{&f, id}, {&s, id}}, guard), guard)) {
    throw InputError("F is not contained in S");
  }
  const Alphabet abab = Alphabet::product({ab.factors()[0], ab.factors()[1], ab.factors()[0], ab.factors()[1]});
  const SoficPresentation cross = intersect_sofic(abab,
                                                  {{&f, factor_map(abab, {0, 1}, ab)},
                                                   {&f, factor_map(abab, {2, 3}, ab)},
                                                   {&s, factor_map(abab, {0, 3}, ab)},
                                                   {&s, factor_map(abab, {2, 1}, ab)}},
                                                  guard);
  return finish_fooling(entropy(f, tol), entropy(cross, tol), tol);
}

CommonFactorReport common_factor_bound(const SftPresentation& s, const BlockCode& phi, const BlockCode& psi,
                                       const SoficPresentation& f, double tol, std::size_t guard) {
  require_pair_alphabet(s.alphabet(), "S");
  const Alphabet& ab = s.alphabet();
  if (!(phi.source() == ab.factors()[0]) || !(psi.source() == ab.factors()[1])) {
    throw InputError("phi must read A and psi must read B");
  }
  if (!(phi.target() == f.alphabet()) || !(psi.target() == f.alphabet())) {
    throw InputError("phi and psi must write F's alphabet");
  }
  CommonFactorReport out;
  const struct {
    const BlockCode* code;
    std::size_t side;
    const char* name;
  } sides[] = {{&phi, 0, "phi"}, {&psi, 1, "psi"}};
  for (const auto& sd : sides) {
    const SoficPresentation image = apply_block_code(*sd.code, project(s, {sd.side}), guard);
    if (auto w = distinguishing_word(image, f, guard)) {
      out.reason = std::string(sd.name) + " image differs from F";
      out.witness = std::move(w);
      return out;
    }
  }
  const int w = std::max(phi.radius(), psi.radius());
  const std::size_t len = 2 * static_cast<std::size_t>(w) + 1;
  for (const Word& window : s.words(len, guard)) {
    const Word xs = project_word(ab, window, 0), ys = project_word(ab, window, 1);
    const auto px = phi.apply(WordView(xs).subspan(static_cast<std::size_t>(w - phi.radius()), phi.span()));
    const auto py = psi.apply(WordView(ys).subspan(static_cast<std::size_t>(w - psi.radius()), psi.span()));
    if (!px || !py || *px != *py) {
      out.reason = "phi and psi disagree on a window of S";
      out.witness = window;
      return out;
    }
  }
  out.accepted = true;
  out.bound = entropy(f, tol);
  out.reason = "commutes";
  return out;
}

}  // namespace icc
