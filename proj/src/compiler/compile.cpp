#include "bidual/compiler/compile.hpp"

#include "bidual/term/print.hpp"

#include <algorithm>
#include <future>
#include <memory>
#include <stdexcept>

namespace bidual {

namespace {

// Binary tree over the limited bidual letters of a word, keyed by position.
struct Node {
  int pos = -1;  // leaf position, or -1 for an internal node
  ProductOp op = ProductOp::Box;
  std::unique_ptr<Node> left;
  std::unique_ptr<Node> right;
  int lo = 0;
  int hi = 0;
};

std::unique_ptr<Node> leaf(int pos) {
  auto n = std::make_unique<Node>();
  n->pos = pos;
  n->lo = n->hi = pos;
  return n;
}

std::unique_ptr<Node> join(ProductOp op, std::unique_ptr<Node> l, std::unique_ptr<Node> r) {
  auto n = std::make_unique<Node>();
  n->op = op;
  n->lo = l->lo;
  n->hi = r->hi;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

// The newly limited letter is outermost so far: □ when it sits to the left
// of a compiled block, ◊ when it sits to the right.
std::unique_ptr<Node> insert(std::unique_ptr<Node> t, int v) {
  if (!t) return leaf(v);
  if (v < t->lo) return join(ProductOp::Box, leaf(v), std::move(t));
  if (v > t->hi) return join(ProductOp::Loz, std::move(t), leaf(v));
  Node* n = t.get();
  while (true) {
    if (v > n->left->hi && v < n->right->lo) {
      if (n->op == ProductOp::Box) {
        n->left = join(ProductOp::Loz, std::move(n->left), leaf(v));
      } else {
        n->right = join(ProductOp::Box, leaf(v), std::move(n->right));
      }
      break;
    }
    n = v < n->left->hi ? n->left.get() : n->right.get();
  }
  return t;
}

struct WordCompiler {
  const std::vector<Term>& letters;  // rendered letters by position
  const std::vector<bool>& loose;    // true for letters that stay in E

  // Letters in E lying strictly between two positions.
  std::vector<Term> loose_between(int from, int to) const {
    std::vector<Term> out;
    for (int i = from + 1; i < to; ++i) {
      if (loose[static_cast<std::size_t>(i)]) out.push_back(letters[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  Term render(const Node& n) const {
    if (n.pos >= 0) return letters[static_cast<std::size_t>(n.pos)];
    std::vector<Term> children{render(*n.left)};
    for (auto& l : loose_between(n.left->hi, n.right->lo)) children.push_back(l);
    children.push_back(render(*n.right));
    return product(n.op, std::move(children));
  }
};

struct CompileContext {
  std::array<int, 3> stage{};  // stage[k-1]: 0 for the innermost limit
  LevelPattern levels{};
};

Term compile_word(const std::vector<Item>& word, const CompileContext& ctx);

Term compile_vector_word(const std::vector<Item>& word, const CompileContext& ctx) {
  std::vector<Term> letters;
  std::vector<bool> loose;
  std::vector<std::pair<int, int>> order;  // (stage, position) of bidual slots
  for (const auto& it : word) {
    int pos = static_cast<int>(letters.size());
    if (it.kind == Item::Kind::Slot) {
      Level lv = ctx.levels[static_cast<std::size_t>(it.slot - 1)];
      letters.push_back(slot_atom(it.slot, lv, it.starred));
      loose.push_back(lv == Level::Algebra);
      if (lv == Level::Bidual) order.emplace_back(ctx.stage[static_cast<std::size_t>(it.slot - 1)], pos);
    } else if (it.kind == Item::Kind::Constant) {
      letters.push_back(atom(it.name, Level::Algebra, it.starred));
      loose.push_back(true);
    } else {
      throw std::logic_error("functional wrapper inside a vector word");
    }
  }
  std::sort(order.begin(), order.end());
  std::unique_ptr<Node> tree;
  for (const auto& [stage, pos] : order) tree = insert(std::move(tree), pos);

  WordCompiler wc{letters, loose};
  const int end = static_cast<int>(letters.size());
  if (!tree) return flat(wc.loose_between(-1, end));
  std::vector<Term> parts = wc.loose_between(-1, tree->lo);
  parts.push_back(wc.render(*tree));
  for (auto& l : wc.loose_between(tree->hi, end)) parts.push_back(l);
  return flat(std::move(parts));
}

Term compile_word(const std::vector<Item>& word, const CompileContext& ctx) {
  std::vector<Term> scalars;
  std::vector<Item> vector_part;
  for (const auto& it : word) {
    if (it.kind == Item::Kind::Wrapper) {
      scalars.push_back(func(it.name, compile_vector_word(it.sub, ctx)));
    } else {
      vector_part.push_back(it);
    }
  }
  scalars.push_back(compile_vector_word(vector_part, ctx));
  return flat(std::move(scalars));
}

CompileContext context_for(const Perm3& sigma, const LevelPattern& levels) {
  CompileContext ctx;
  ctx.levels = levels;
  // σ(1) is the outermost limit, σ(3) the innermost.
  for (int s = 1; s <= 3; ++s) ctx.stage[static_cast<std::size_t>(sigma(s) - 1)] = 3 - s;
  return ctx;
}

const Term& placeholder(int k) {
  static const std::array<Term, 3> atoms{slot_atom(1, Level::Bidual), slot_atom(2, Level::Bidual),
                                         slot_atom(3, Level::Bidual)};
  return atoms[static_cast<std::size_t>(k - 1)];
}

nlohmann::json partition_json(const Partition& p) {
  auto out = nlohmann::json::array();
  for (const auto& cls : p) out.push_back(cls);
  return out;
}

}  // namespace

Term compile_extension(const TrilinearTemplate& tpl, const Perm3& sigma, const LevelPattern& levels) {
  CompileContext ctx = context_for(sigma, levels);
  std::vector<std::pair<Scalar, Term>> addends;
  for (const auto& m : tpl.monomials()) addends.emplace_back(m.coeff, compile_word(m.word, ctx));
  return normalize(sum(std::move(addends)));
}

Partition partition_by_equality(const std::array<Term, 6>& terms, const RelationSet& r) {
  std::array<Term, 6> nf;
  for (std::size_t i = 0; i < 6; ++i) nf[i] = normalize(terms[i], r);
  Partition out;
  std::array<bool, 6> placed{};
  for (int i = 0; i < 6; ++i) {
    if (placed[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cls{i};
    for (int j = i + 1; j < 6; ++j) {
      if (!placed[static_cast<std::size_t>(j)] && nf[static_cast<std::size_t>(i)] == nf[static_cast<std::size_t>(j)]) {
        cls.push_back(j);
        placed[static_cast<std::size_t>(j)] = true;
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

nlohmann::json ExtensionReport::to_json() const {
  auto ext = nlohmann::json::array();
  for (const auto& t : extensions) ext.push_back(to_string(t));
  return {{"extensions", ext}, {"relations", relations.to_string()}, {"classes", partition_json(classes)},
          {"regular", regular}};
}

ExtensionReport all_extensions(const TrilinearTemplate& tpl, const RelationSet& r, const LevelPattern& levels) {
  ExtensionReport rep;
  rep.relations = r;
  std::array<std::future<Term>, 6> jobs;
  for (std::size_t i = 0; i < 6; ++i) {
    jobs[i] = std::async(std::launch::async, [&tpl, &levels, i] {
      return compile_extension(tpl, Perm3::from_label(static_cast<int>(i)), levels);
    });
  }
  for (std::size_t i = 0; i < 6; ++i) rep.extensions[i] = jobs[i].get();
  rep.classes = partition_by_equality(rep.extensions, r);
  rep.regular = rep.classes.size() == 1;
  return rep;
}

Partition coincidence_on_mixed(const TrilinearTemplate& tpl, const LevelPattern& levels) {
  return all_extensions(tpl, {}, levels).classes;
}

bool triple_implies_regular(const ExtensionReport& report, const PermTriple& triple) {
  auto cls = [&report](const Perm3& p) {
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
      for (int i : report.classes[c]) {
        if (i == p.label()) return c;
      }
    }
    throw std::logic_error("label missing from partition");
  };
  bool three_equal = cls(triple[0]) == cls(triple[1]) && cls(triple[1]) == cls(triple[2]);
  return !three_equal || report.regular;
}

Term apply_extension(const Term& compiled, const Term& x, const Term& y, const Term& z) {
  return substitute(compiled, {{"m", x}, {"n", y}, {"p", z}});
}

SymmetryResult outer_symmetry_check(const TrilinearTemplate& tpl, int i, const RelationSet& r) {
  Term pi = compile_extension(tpl, Perm3::from_label(i));
  Term swapped = apply_extension(pi, placeholder(3), placeholder(2), placeholder(1));
  SymmetryResult res;
  res.residual = normalize(minus(pi, swapped), r);
  res.holds = res.residual.is_zero();
  return res;
}

std::vector<PairIdentity> symmetry_pairs_check(const TrilinearTemplate& tpl) {
  if (!tpl.outer_symmetric()) throw TemplateError("template is not symmetric in its outer slots");
  std::array<Term, 6> pi;
  for (int i = 0; i < 6; ++i) pi[static_cast<std::size_t>(i)] = compile_extension(tpl, Perm3::from_label(i));
  std::vector<PairIdentity> out;
  for (auto [l, r] : {std::pair{0, 2}, std::pair{1, 4}, std::pair{3, 5}}) {
    PairIdentity id{l, r, false, {}};
    Term rhs = apply_extension(pi[static_cast<std::size_t>(r)], placeholder(3), placeholder(2), placeholder(1));
    id.residual = normalize(minus(pi[static_cast<std::size_t>(l)], rhs));
    id.holds = id.residual.is_zero();
    out.push_back(std::move(id));
  }
  return out;
}

Term jordan_identity_residual(const TrilinearTemplate& tpl, int i, const JordanBindings& bindings,
                              const RelationSet& r) {
  static const std::map<std::string, std::string> defaults{{"a", "m"}, {"b", "n"}, {"c", "x"}, {"d", "y"}, {"e", "z"}};
  std::map<std::string, Term> v;
  for (const auto& [var, name] : defaults) v[var] = atom(name, Level::Bidual);
  for (const auto& [var, t] : bindings) {
    if (!defaults.count(var)) throw std::invalid_argument("Jordan variables are a, b, c, d, e; got '" + var + "'");
    v[var] = t;
  }
  Term pi = compile_extension(tpl, Perm3::from_label(i));
  auto P = [&pi](const Term& x, const Term& y, const Term& z) { return apply_extension(pi, x, y, z); };
  const Term &a = v["a"], &b = v["b"], &c = v["c"], &d = v["d"], &e = v["e"];
  Term t1 = P(a, b, P(c, d, e));
  Term t2 = P(P(a, b, c), d, e);
  Term t3 = P(c, P(b, a, d), e);
  Term t4 = P(c, d, P(a, b, e));
  return normalize(sum({{Scalar(1), t1}, {Scalar(-1), t2}, {Scalar(1), t3}, {Scalar(-1), t4}}), r);
}

std::vector<CenterEquation> center_equations(const TrilinearTemplate& tpl, int j, const PermTriple& triple) {
  if (j < 1 || j > 3) throw std::invalid_argument("center index j must be 1, 2 or 3");
  bool by_definition = distinct_at(triple, 1) && triple[0](1) == j;
  if (!by_definition && !distinct_at(triple, j)) {
    throw std::invalid_argument("triple (" + triple[0].name(true) + "," + triple[1].name(true) + "," +
                                triple[2].name(true) + ") is not admissible for center " + std::to_string(j));
  }
  std::array<Term, 3> pi;
  for (std::size_t k = 0; k < 3; ++k) pi[k] = compile_extension(tpl, triple[k]);
  std::vector<CenterEquation> out;
  for (auto [l, r] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    out.push_back({triple[static_cast<std::size_t>(l)].label(), triple[static_cast<std::size_t>(r)].label(),
                   normalize(minus(pi[static_cast<std::size_t>(l)], pi[static_cast<std::size_t>(r)]))});
  }
  return out;
}

}  // namespace bidual
