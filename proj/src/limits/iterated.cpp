#include "bidual/limits/iterated.hpp"

#include "bidual/common/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <iomanip>
#include <sstream>

namespace bidual {

Family::Family(GroupTag tag, std::int64_t scale, std::int64_t shift) : tag_(tag), scale_(scale), shift_(shift) {}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view spec) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad family '" + std::string(spec) + "'");
  }
  return v;
}

}  // namespace

Family Family::parse(GroupTag tag, std::string_view spec) {
  std::string text;
  for (char c : spec) {
    if (c != ' ') text.push_back(c);
  }
  if (text.empty()) throw std::invalid_argument("empty family");
  auto npos = text.find('n');
  if (npos == std::string::npos) return {tag, 0, parse_int(text, spec)};
  std::string coeff = text.substr(0, npos);
  std::int64_t scale = coeff.empty() || coeff == "+" ? 1 : coeff == "-" ? -1 : parse_int(coeff, spec);
  std::string rest = text.substr(npos + 1);
  std::int64_t shift = 0;
  if (!rest.empty()) {
    if (rest[0] != '+' && rest[0] != '-') throw std::invalid_argument("bad family '" + std::string(spec) + "'");
    shift = parse_int(rest[0] == '+' ? std::string_view(rest).substr(1) : std::string_view(rest), spec);
  }
  return {tag, scale, shift};
}

TruncatedSeq Family::operator()(std::int64_t i) const { return TruncatedSeq::delta(tag_, scale_ * i + shift_); }

std::string Family::to_string() const {
  if (scale_ == 0) return std::to_string(shift_);
  std::string s = scale_ == 1 ? "n" : scale_ == -1 ? "-n" : std::to_string(scale_) + "n";
  if (shift_ > 0) s += "+" + std::to_string(shift_);
  if (shift_ < 0) s += std::to_string(shift_);
  return s;
}

namespace {

using Grid = std::function<Scalar(const std::array<std::int64_t, 3>&)>;

// vars: variable ids outer to inner. Level l ranges over 1..(l+1)N.
struct Nest {
  std::vector<int> vars;
  LimitSettings s;
  Grid v;

  std::int64_t range(std::size_t level) const { return static_cast<std::int64_t>(level + 1) * s.N; }
  std::int64_t window() const { return std::max<std::int64_t>(1, std::min(s.window, s.N)); }

  std::optional<Scalar> value_at(std::size_t level, std::array<std::int64_t, 3> idx, std::int64_t i) const {
    idx[static_cast<std::size_t>(vars[level])] = i;
    if (level + 1 == vars.size()) return v(idx);
    return limit(level + 1, idx);
  }

  // Limit of the level-th variable: constant over the trailing window.
  std::optional<Scalar> limit(std::size_t level, const std::array<std::int64_t, 3>& idx) const {
    const std::int64_t r = range(level);
    std::optional<Scalar> first;
    for (std::int64_t i = r; i > r - window(); --i) {
      auto x = value_at(level, idx, i);
      if (!x) return std::nullopt;
      if (!first) {
        first = x;
      } else if (!(*x == *first)) {
        return std::nullopt;
      }
    }
    return first;
  }

  OrderValue outer(const std::string& name) const {
    OrderValue out{name, std::nullopt, -1};
    const std::int64_t r = range(0);
    auto seq = parallel_map(static_cast<std::size_t>(r), [&](std::size_t k) {
      return value_at(0, {1, 1, 1}, static_cast<std::int64_t>(k) + 1);
    });
    std::int64_t w = window();
    const auto& last = seq.back();
    if (!last) return out;
    std::int64_t from = r;
    while (from > 1 && seq[static_cast<std::size_t>(from - 2)] && *seq[static_cast<std::size_t>(from - 2)] == *last) --from;
    if (r - from + 1 < w) return out;
    out.value = last;
    out.stable_from = from;
    return out;
  }
};

std::string order_name(const std::vector<int>& vars, const std::vector<std::string>& names) {
  std::string s;
  for (int v : vars) s += (s.empty() ? "" : " ") + std::string("lim_") + names[static_cast<std::size_t>(v)];
  return s;
}

}  // namespace

bool IteratedLimitReport::all_converged() const {
  return std::all_of(orders.begin(), orders.end(), [](const OrderValue& o) { return o.converged(); });
}

double IteratedLimitReport::gap() const {
  double g = 0.0;
  for (const auto& p : pairwise()) {
    if (p.gap) g = std::max(g, *p.gap);
  }
  return g;
}

std::vector<PairGap> IteratedLimitReport::pairwise() const {
  std::vector<PairGap> out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      PairGap p{orders[i].order, orders[j].order, std::nullopt};
      if (orders[i].value && orders[j].value) p.gap = (*orders[i].value - *orders[j].value).abs();
      out.push_back(p);
    }
  }
  return out;
}

nlohmann::json IteratedLimitReport::to_json() const {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["space"] = space_name(space);
  j["functional"] = functional;
  j["families"] = families;
  j["N"] = settings.N;
  j["window"] = std::min(settings.window, settings.N);
  auto arr = nlohmann::json::array();
  for (const auto& o : orders) {
    nlohmann::json e;
    e["order"] = o.order;
    e["converged"] = o.converged();
    e["value"] = o.value ? nlohmann::json(o.value->to_string()) : nlohmann::json(nullptr);
    e["stable_from"] = o.value ? nlohmann::json(o.stable_from) : nlohmann::json(nullptr);
    arr.push_back(e);
  }
  j["orders"] = arr;
  j["all_converged"] = all_converged();
  j["gap"] = gap();
  if (orders.size() > 2) {
    auto pairs = nlohmann::json::array();
    for (const auto& p : pairwise()) {
      pairs.push_back({{"first", p.first}, {"second", p.second},
                       {"gap", p.gap ? nlohmann::json(*p.gap) : nlohmann::json(nullptr)}});
    }
    j["pairwise"] = pairs;
  }
  return j;
}

std::string IteratedLimitReport::to_table() const {
  std::size_t width = 5;
  for (const auto& o : orders) width = std::max(width, o.order.size());
  std::ostringstream os;
  os << experiment << " on " << space_name(space) << ", functional " << functional << ", families (";
  for (std::size_t i = 0; i < families.size(); ++i) os << (i ? ", " : "") << families[i];
  os << "), N=" << settings.N << ", window=" << std::min(settings.window, settings.N) << "\n";
  os << "  " << std::left << std::setw(static_cast<int>(width)) << "order" << "  " << std::setw(8) << "value"
     << "  " << std::setw(9) << "converged" << "  stable_from\n";
  for (const auto& o : orders) {
    os << "  " << std::setw(static_cast<int>(width)) << o.order << "  " << std::setw(8)
       << (o.value ? o.value->to_string() : "-") << "  " << std::setw(9) << (o.converged() ? "yes" : "no") << "  "
       << (o.value ? std::to_string(o.stable_from) : "-") << "\n";
  }
  os << "  gap = " << gap() << "\n";
  return os.str();
}

IteratedLimitReport arens_gap(const Family& f1, const Family& f2, const TestFunctional& psi, const LimitSettings& s) {
  if (f1.tag() != f2.tag()) throw SequenceError("families live on different groups");
  if (s.N < 1 || s.window < 1) throw std::invalid_argument("N and window must be positive");
  Grid v = [&](const std::array<std::int64_t, 3>& idx) { return pair(psi, multiply(f1(idx[0]), f2(idx[1]))); };
  const std::vector<std::string> names{"n", "k"};
  IteratedLimitReport r;
  r.experiment = "bilinear";
  r.space = f1.tag();
  r.functional = psi.name();
  r.families = {f1.to_string(), f2.to_string()};
  r.settings = s;
  for (const auto& vars : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
    r.orders.push_back(Nest{vars, s, v}.outer(order_name(vars, names)));
  }
  return r;
}

TruncatedSeq triple_product(const TruncatedSeq& a, const TruncatedSeq& b, const TruncatedSeq& c) {
  return multiply(multiply(a, involution(b)), c);
}

OrderValue triple_limit(const std::array<Family, 3>& families, const TestFunctional& psi, const Perm3& sigma,
                        const LimitSettings& s) {
  if (families[0].tag() != families[1].tag() || families[1].tag() != families[2].tag()) {
    throw SequenceError("families live on different groups");
  }
  if (s.N < 1 || s.window < 1) throw std::invalid_argument("N and window must be positive");
  Grid v = [&](const std::array<std::int64_t, 3>& idx) {
    return pair(psi, triple_product(families[0](idx[0]), families[1](idx[1]), families[2](idx[2])));
  };
  std::vector<int> vars{sigma(1) - 1, sigma(2) - 1, sigma(3) - 1};
  return Nest{vars, s, v}.outer(sigma.name(true));
}

namespace {

IteratedLimitReport triple_report(const std::array<Family, 3>& families, const TestFunctional& psi,
                                  const std::vector<Perm3>& perms, const LimitSettings& s, std::string experiment) {
  IteratedLimitReport r;
  r.experiment = std::move(experiment);
  r.space = families[0].tag();
  r.functional = psi.name();
  for (const auto& f : families) r.families.push_back(f.to_string());
  r.settings = s;
  for (const auto& p : perms) r.orders.push_back(triple_limit(families, psi, p, s));
  return r;
}

}  // namespace

IteratedLimitReport triple_gap(const std::array<Family, 3>& families, const TestFunctional& psi,
                               const std::pair<Perm3, Perm3>& orders, const LimitSettings& s) {
  return triple_report(families, psi, {orders.first, orders.second}, s, "triple");
}

IteratedLimitReport triple_all_orders(const std::array<Family, 3>& families, const TestFunctional& psi,
                                      const LimitSettings& s) {
  const auto& all = Perm3::all();
  return triple_report(families, psi, {all.begin(), all.end()}, s, "triple_all_orders");
}

bool WitnessReport::expected() const {
  if (!bilinear.all_converged() || !triple.all_converged() || !all_orders.all_converged()) return false;
  if (bilinear.space == GroupTag::ZConv) return bilinear.gap() == 1.0 && triple.gap() == 1.0;
  for (const auto& r : {bilinear, triple, all_orders}) {
    for (const auto& p : r.pairwise()) {
      if (!p.gap || *p.gap != 0.0) return false;
    }
  }
  return true;
}

nlohmann::json WitnessReport::to_json() const {
  return {{"bilinear", bilinear.to_json()},
          {"triple", triple.to_json()},
          {"all_orders", all_orders.to_json()},
          {"expected", expected()}};
}

std::string WitnessReport::to_text() const {
  return bilinear.to_table() + "\n" + triple.to_table() + "\n" + all_orders.to_table();
}

WitnessReport run_witness(GroupTag space, const TestFunctional& psi, const LimitSettings& s) {
  const bool z = space == GroupTag::ZConv;
  Family up(space, 1, 0);
  Family second = z ? Family(space, -1, 0) : up;
  std::array<Family, 3> fam{up, z ? Family(space, 0, 0) : up, second};
  WitnessReport w;
  w.bilinear = arens_gap(up, second, psi, s);
  w.triple = triple_gap(fam, psi, {Perm3::from_label(0), Perm3::from_label(2)}, s);
  w.all_orders = triple_all_orders(fam, psi, s);
  return w;
}

}  // namespace bidual
