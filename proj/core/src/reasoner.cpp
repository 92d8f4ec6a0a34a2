// Copyright 2026 The star-engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "star/reasoner.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace star {

const char* to_string(ConceptKind k) {
  switch (k) {
    case ConceptKind::Constant: return "constant";
    case ConceptKind::Fluent: return "fluent";
    case ConceptKind::Action: return "action";
  }
  return "?";
}

const char* to_string(TruthValue v) {
  switch (v) {
    case TruthValue::True: return "true";
    case TruthValue::False: return "false";
    case TruthValue::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(ProvenanceKind p) {
  switch (p) {
    case ProvenanceKind::None: return "none";
    case ProvenanceKind::Observation: return "observation";
    case ProvenanceKind::ConstantDecl: return "constant";
    case ProvenanceKind::PropertyRule: return "property";
    case ProvenanceKind::CausalRule: return "causal";
    case ProvenanceKind::Inertia: return "inertia";
  }
  return "?";
}

const Cell* ComprehensionModel::find(const Term& atom, int t) const {
  if (t < 0 || t > horizon) return nullptr;
  for (std::size_t i = 0; i < concepts.size(); ++i)
    if (concepts[i] == atom) return &at(i, t);
  return nullptr;
}

std::optional<TraceSet> TraceSet::parse(std::string_view list) {
  TraceSet out;
  while (!list.empty()) {
    auto comma = list.find(',');
    auto name = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (name.empty()) continue;
    if (name == "all") out = all();
    else if (name == "universal") out.universal = true;
    else if (name == "acceptable") out.acceptable = true;
    else if (name == "retracted") out.retracted = true;
    else if (name == "elaborated") out.elaborated = true;
    else if (name == "qualified") out.qualified = true;
    else return std::nullopt;
  }
  return out;
}

CycleBudgetExceeded::CycleBudgetExceeded(int session, int t, std::size_t budget)
    : EngineError("comprehension model of session s(" + std::to_string(session) +
                  ") does not settle at time-point " + std::to_string(t) +
                  " within " + std::to_string(budget) + " iterations"),
      session_(session),
      t_(t) {}

TimeOutOfRange::TimeOutOfRange(int question_id, int t, int horizon)
    : EngineError("question q(" + std::to_string(question_id) +
                  ") asks about time-point " + std::to_string(t) +
                  " beyond the horizon " + std::to_string(horizon)) {}

PriorityClosure::PriorityClosure(const std::vector<Priority>& priorities) {
  std::map<RuleLabel, std::vector<RuleLabel>> direct;
  for (const auto& p : priorities) direct[p.stronger].push_back(p.weaker);
  for (const auto& [from, _] : direct) {
    auto& reach = weaker_than_[from];
    std::vector<RuleLabel> stack = direct[from];
    while (!stack.empty()) {
      RuleLabel l = std::move(stack.back());
      stack.pop_back();
      if (!reach.insert(l).second) continue;
      auto it = direct.find(l);
      if (it != direct.end())
        stack.insert(stack.end(), it->second.begin(), it->second.end());
    }
  }
}

bool PriorityClosure::stronger(const RuleLabel& a, const RuleLabel& b) const {
  auto it = weaker_than_.find(a);
  return it != weaker_than_.end() && it->second.count(b) > 0;
}

namespace {

// Strength tiers of a support, strongest first.
enum class Tier { Observed = 0, Rule = 1, Inertia = 2 };

struct Contender {
  bool negative;
  Tier tier;
  const RuleLabel* label;  // Rule tier only
};

bool beats(const Contender& w, const Contender& l, const PriorityClosure& pc) {
  if (w.tier != l.tier) return w.tier < l.tier;
  return w.tier == Tier::Rule && pc.stronger(*w.label, *l.label);
}

struct Outcome {
  TruthValue value = TruthValue::Unknown;
  std::optional<std::size_t> winner;
  std::vector<std::size_t> survivors;
};

Outcome resolve_contenders(const std::vector<Contender>& cs,
                           const PriorityClosure& pc) {
  Outcome out;
  for (Tier tier : {Tier::Observed, Tier::Rule, Tier::Inertia}) {
    std::vector<std::size_t> present;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (cs[i].tier == tier) present.push_back(i);
    if (present.empty()) continue;

    // The strongest non-empty tier decides; lower tiers are defeated outright.
    std::vector<std::size_t> alive;
    for (std::size_t i : present) {
      bool defeated = false;
      for (std::size_t j : present)
        if (cs[j].negative != cs[i].negative && beats(cs[j], cs[i], pc)) {
          defeated = true;
          break;
        }
      if (!defeated) alive.push_back(i);
    }
    if (alive.empty()) return out;
    for (std::size_t i : alive)
      if (cs[i].negative != cs[alive.front()].negative) return out;
    out.value = cs[alive.front()].negative ? TruthValue::False : TruthValue::True;
    out.winner = alive.front();
    out.survivors = std::move(alive);
    return out;
  }
  return out;
}

Tier tier_of(ProvenanceKind k) {
  switch (k) {
    case ProvenanceKind::Observation:
    case ProvenanceKind::ConstantDecl:
      return Tier::Observed;
    case ProvenanceKind::PropertyRule:
    case ProvenanceKind::CausalRule:
      return Tier::Rule;
    default:
      return Tier::Inertia;
  }
}

bool is_constant_concept(const std::vector<Observation>& obs, const Term& c) {
  return std::any_of(obs.begin(), obs.end(), [&](const Observation& o) {
    return o.time.is_always() && o.literal.atom == c;
  });
}

ConceptKind classify(const std::vector<Observation>& obs,
                     const FluentsDecl& fluents, const Term& atom) {
  if (is_constant_concept(obs, atom)) return ConceptKind::Constant;
  for (const auto& p : fluents.fluents)
    if (matches(p, atom)) return ConceptKind::Fluent;
  return ConceptKind::Action;
}

struct GLit {
  std::size_t id;
  bool negative;
};

struct CompiledRule {
  const GroundRule* source;
  std::vector<GLit> body;
  GLit head;
};

enum class CandKind { Observation, ConstantDecl, Rule, Inertia };

struct Cand {
  bool negative;
  CandKind kind;
  std::size_t ref;  // observation index, or compiled rule index
};

struct Blocked {
  Cand cand;
  std::vector<std::size_t> blockers;  // preclusion rule indices
};

// State of one (concept, t) cell after the time-point has settled.
struct Settled {
  TruthValue value = TruthValue::Unknown;
  Provenance provenance;
  std::string winner_id;
};

class Engine {
 public:
  Engine(const GroundProgram& g, int session, int horizon)
      : g_(g), session_(session), horizon_(horizon), priorities_(g.priorities) {
    for (const auto& o : g.observations) intern(o.literal.atom);
    for (const auto& q : g.questions)
      for (const auto& c : q.choices) intern(c.literal.atom);
    rules_.reserve(g.rules.size());
    for (const auto& r : g.rules) {
      CompiledRule cr{&r, {}, {intern(r.head.atom), r.head.negative}};
      for (const auto& l : r.body) cr.body.push_back({intern(l.atom), l.negative});
      rules_.push_back(std::move(cr));
    }

    const std::size_t n = concepts_.size();
    kinds_.resize(n);
    for (std::size_t c = 0; c < n; ++c)
      kinds_[c] = classify(g.observations, g.fluent_patterns, concepts_[c]);

    property_by_body_.resize(n);
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      switch (rules_[r].source->kind) {
        case RuleKind::Property:
          property_.push_back(r);
          for (const auto& l : rules_[r].body) {
            auto& v = property_by_body_[l.id];
            if (v.empty() || v.back() != r) v.push_back(r);
          }
          break;
        case RuleKind::Causal:
          causal_.push_back(r);
          break;
        case RuleKind::Preclusion:
          preclusion_.push_back(r);
          break;
      }
    }
    grid_.assign(static_cast<std::size_t>(horizon + 1), std::vector<Settled>(n));
    ever_fired_.assign(rules_.size(), false);
  }

  void run() {
    std::vector<std::size_t> causal_fired, preclusion_fired;
    for (int t = 0; t <= horizon_; ++t) {
      settle(t, causal_fired, preclusion_fired);
      causal_fired.clear();
      preclusion_fired.clear();
      if (t == horizon_) break;
      for (std::size_t r : causal_)
        if (holds(rules_[r], t)) {
          causal_fired.push_back(r);
          ever_fired_[r] = true;
        }
      for (std::size_t r : preclusion_)
        if (holds(rules_[r], t)) preclusion_fired.push_back(r);
    }
  }

  SessionResult result() const {
    SessionResult out;
    out.session = session_;
    auto& m = out.model;
    m.session = session_;
    m.horizon = horizon_;

    std::vector<bool> listed(concepts_.size(), false);
    std::vector<std::size_t> order;
    auto list = [&](std::size_t c) {
      if (!listed[c]) {
        listed[c] = true;
        order.push_back(c);
      }
    };
    for (const auto& o : g_.observations)
      if (o.session <= session_) list(index_.at(o.literal.atom.str()));
    for (const auto& q : g_.questions)
      for (const auto& c : q.choices) list(index_.at(c.literal.atom.str()));
    for (std::size_t r = 0; r < rules_.size(); ++r)
      if (ever_fired_[r]) list(rules_[r].head.id);

    m.concepts.reserve(order.size());
    m.cells.reserve(order.size() * static_cast<std::size_t>(horizon_ + 1));
    for (std::size_t c : order) {
      m.concepts.push_back(concepts_[c]);
      for (int t = 0; t <= horizon_; ++t) {
        const Settled& s = grid_[t][c];
        m.cells.push_back(Cell{concepts_[c], t, s.value, s.provenance.is_observed(),
                               s.provenance, kinds_[c]});
      }
    }

    out.report.universal = universal_;
    out.report.acceptable.assign(acceptable_.begin(), acceptable_.end());
    out.report.qualified.assign(qualified_.begin(), qualified_.end());
    return out;
  }

 private:
  std::size_t intern(const Term& t) {
    auto [it, fresh] = index_.emplace(t.str(), concepts_.size());
    if (fresh) concepts_.push_back(t);
    return it->second;
  }

  static bool literal_holds(TruthValue v, bool negative) {
    return v == (negative ? TruthValue::False : TruthValue::True);
  }

  bool holds(const CompiledRule& r, int t) const {
    for (const auto& l : r.body)
      if (!literal_holds(grid_[t][l.id].value, l.negative)) return false;
    return true;
  }

  static bool holds(const CompiledRule& r, const std::vector<TruthValue>& values) {
    for (const auto& l : r.body)
      if (!literal_holds(values[l.id], l.negative)) return false;
    return true;
  }

  // Observation, then rule supports in program order, then inertia.
  std::vector<Cand> candidates(const std::vector<Cand>& observed,
                               const std::vector<Cand>& causal,
                               const std::vector<std::size_t>& property,
                               const std::optional<Cand>& inertia) const {
    std::vector<Cand> out = observed;
    std::size_t i = 0, j = 0;
    while (i < causal.size() || j < property.size()) {
      if (j == property.size() || (i < causal.size() && causal[i].ref < property[j])) {
        out.push_back(causal[i++]);
      } else {
        out.push_back(Cand{rules_[property[j]].head.negative, CandKind::Rule, property[j]});
        ++j;
      }
    }
    if (inertia) out.push_back(*inertia);
    return out;
  }

  std::vector<Contender> contenders(const std::vector<Cand>& cands) const {
    std::vector<Contender> out;
    out.reserve(cands.size());
    for (const auto& k : cands) {
      switch (k.kind) {
        case CandKind::Observation:
        case CandKind::ConstantDecl:
          out.push_back({k.negative, Tier::Observed, nullptr});
          break;
        case CandKind::Rule:
          out.push_back({k.negative, Tier::Rule, &rules_[k.ref].source->origin});
          break;
        case CandKind::Inertia:
          out.push_back({k.negative, Tier::Inertia, nullptr});
          break;
      }
    }
    return out;
  }

  void settle(int t, const std::vector<std::size_t>& causal_fired,
              const std::vector<std::size_t>& preclusion_fired) {
    const std::size_t n = concepts_.size();
    std::vector<std::vector<Cand>> observed(n), causal(n);
    std::vector<std::optional<Cand>> inertia(n);
    std::vector<std::vector<Blocked>> blocked(n);

    for (std::size_t i = 0; i < g_.observations.size(); ++i) {
      const auto& o = g_.observations[i];
      if (o.session > session_) continue;
      if (!o.time.is_always() && o.time.point() != t) continue;
      observed[index_.at(o.literal.atom.str())].push_back(
          Cand{o.literal.negative,
               o.time.is_always() ? CandKind::ConstantDecl : CandKind::Observation, i});
    }

    auto blockers_of = [&](std::size_t id, bool negative) {
      std::vector<std::size_t> out;
      for (std::size_t p : preclusion_fired)
        if (rules_[p].head.id == id && rules_[p].head.negative == negative)
          out.push_back(p);
      return out;
    };

    for (std::size_t r : causal_fired) {
      const auto& head = rules_[r].head;
      Cand cand{head.negative, CandKind::Rule, r};
      std::vector<std::size_t> by;
      for (std::size_t p : blockers_of(head.id, head.negative))
        if (!priorities_.stronger(rules_[r].source->origin, rules_[p].source->origin))
          by.push_back(p);
      if (by.empty())
        causal[head.id].push_back(cand);
      else
        blocked[head.id].push_back(Blocked{cand, std::move(by)});
    }

    if (t > 0) {
      for (std::size_t c = 0; c < n; ++c) {
        if (kinds_[c] != ConceptKind::Fluent) continue;
        TruthValue prev = grid_[t - 1][c].value;
        if (prev == TruthValue::Unknown) continue;
        Cand cand{prev == TruthValue::False, CandKind::Inertia, 0};
        auto by = blockers_of(c, cand.negative);
        if (by.empty())
          inertia[c] = cand;
        else
          blocked[c].push_back(Blocked{cand, std::move(by)});
      }
    }

    // Jacobi iteration of property rules: every step evaluates rule bodies
    // against the previous step's values, then resolves the touched cells.
    std::vector<TruthValue> cur(n, TruthValue::Unknown);
    std::vector<bool> fires(rules_.size(), false);
    std::vector<std::vector<std::size_t>> property_fired(n);
    std::vector<std::size_t> to_check = property_;
    std::vector<std::size_t> touched(n);
    for (std::size_t c = 0; c < n; ++c) touched[c] = c;

    const std::size_t budget = 4 * n;
    std::size_t steps = 0;
    for (;;) {
      std::vector<std::pair<std::size_t, bool>> flips;
      for (std::size_t r : to_check) {
        bool f = holds(rules_[r], cur);
        if (f != fires[r]) flips.emplace_back(r, f);
      }
      std::unordered_set<std::size_t> touched_set(touched.begin(), touched.end());
      for (auto [r, f] : flips) {
        fires[r] = f;
        auto& list = property_fired[rules_[r].head.id];
        if (f)
          list.insert(std::lower_bound(list.begin(), list.end(), r), r);
        else
          list.erase(std::find(list.begin(), list.end(), r));
        touched_set.insert(rules_[r].head.id);
      }

      std::vector<std::pair<std::size_t, TruthValue>> changes;
      for (std::size_t c : touched_set) {
        auto cands = candidates(observed[c], causal[c], property_fired[c], inertia[c]);
        TruthValue v = resolve_contenders(contenders(cands), priorities_).value;
        if (v != cur[c]) changes.emplace_back(c, v);
      }
      if (changes.empty()) break;
      if (++steps > budget) throw CycleBudgetExceeded(session_, t, budget);

      std::unordered_set<std::size_t> check_set;
      touched.clear();
      for (auto [c, v] : changes) {
        cur[c] = v;
        for (std::size_t r : property_by_body_[c]) check_set.insert(r);
      }
      to_check.assign(check_set.begin(), check_set.end());
      std::sort(to_check.begin(), to_check.end());
    }

    for (std::size_t r : property_)
      if (fires[r]) ever_fired_[r] = true;

    // Preclusion arguments concluding at t.
    for (std::size_t p : preclusion_fired) {
      Argument a = rule_argument(p, t, t - 1);
      a.precludes = true;
      acceptable_.insert(a.id);
      add_universal(std::move(a));
    }

    // Settle every cell first: rule arguments cite the winners of their body
    // cells at this same time-point.
    std::vector<std::vector<Cand>> final_cands(n);
    std::vector<Outcome> outcomes(n);
    for (std::size_t c = 0; c < n; ++c) {
      final_cands[c] = candidates(observed[c], causal[c], property_fired[c], inertia[c]);
      if (final_cands[c].empty()) continue;
      outcomes[c] = resolve_contenders(contenders(final_cands[c]), priorities_);
      Settled& cell = grid_[t][c];
      cell.value = outcomes[c].value;
      if (outcomes[c].winner) {
        const Cand& w = final_cands[c][*outcomes[c].winner];
        cell.provenance = provenance(w);
        cell.winner_id = candidate_id(w, c, t);
      }
    }

    for (std::size_t c = 0; c < n; ++c) {
      const auto& cands = final_cands[c];
      std::vector<std::string> ids;
      ids.reserve(cands.size());
      for (const auto& k : cands) {
        Argument a = argument(k, c, t);
        ids.push_back(a.id);
        add_universal(std::move(a));
      }
      const Outcome& res = outcomes[c];
      if (res.winner) {
        auto cont = contenders(cands);
        for (std::size_t i : res.survivors) acceptable_.insert(ids[i]);
        for (std::size_t w : res.survivors)
          for (std::size_t l = 0; l < cands.size(); ++l)
            if (cont[l].negative != cont[w].negative && beats(cont[w], cont[l], priorities_))
              qualified_.emplace(ids[w], ids[l]);
      }
      for (const auto& b : blocked[c]) {
        Argument a = argument(b.cand, c, t);
        for (std::size_t p : b.blockers)
          qualified_.emplace(rule_argument_id(p, t), a.id);
        add_universal(std::move(a));
      }
    }
  }

  std::string candidate_id(const Cand& k, std::size_t c, int t) const {
    Literal lit{k.negative, concepts_[c]};
    switch (k.kind) {
      case CandKind::Observation:
      case CandKind::ConstantDecl:
        return "s(" + std::to_string(g_.observations[k.ref].session) + "):" +
               lit.str() + "@" + std::to_string(t);
      case CandKind::Inertia:
        return "inertia:" + lit.str() + "@" + std::to_string(t);
      case CandKind::Rule:
        return rule_argument_id(k.ref, t);
    }
    return {};
  }

  Provenance provenance(const Cand& k) const {
    switch (k.kind) {
      case CandKind::Observation:
        return Provenance::observation();
      case CandKind::ConstantDecl:
        return Provenance::constant_decl();
      case CandKind::Inertia:
        return Provenance::inertia();
      case CandKind::Rule: {
        const GroundRule& r = *rules_[k.ref].source;
        return r.kind == RuleKind::Causal ? Provenance::causal(r.origin)
                                          : Provenance::property(r.origin);
      }
    }
    return {};
  }

  std::string rule_argument_id(std::size_t r, int t) const {
    const GroundRule& g = *rules_[r].source;
    return g.origin.str() + "#" + std::to_string(g.instance_id) + "@" + std::to_string(t);
  }

  Argument rule_argument(std::size_t r, int t, int body_t) const {
    const GroundRule& g = *rules_[r].source;
    Argument a;
    a.id = rule_argument_id(r, t);
    a.conclusion = g.head;
    a.t = t;
    a.source = Argument::Source::Rule;
    a.rule = g.origin;
    a.rule_kind = g.kind;
    a.instance_id = g.instance_id;
    for (const auto& l : rules_[r].body)
      a.premises.push_back(grid_[body_t][l.id].winner_id);
    return a;
  }

  Argument argument(const Cand& k, std::size_t c, int t) const {
    Literal lit{k.negative, concepts_[c]};
    switch (k.kind) {
      case CandKind::Observation:
      case CandKind::ConstantDecl: {
        const Observation& o = g_.observations[k.ref];
        Argument a;
        a.id = candidate_id(k, c, t);
        a.conclusion = std::move(lit);
        a.t = t;
        a.source = k.kind == CandKind::Observation ? Argument::Source::Observation
                                                   : Argument::Source::ConstantDecl;
        a.observation = o;
        return a;
      }
      case CandKind::Inertia: {
        Argument a;
        a.id = candidate_id(k, c, t);
        a.conclusion = std::move(lit);
        a.t = t;
        a.source = Argument::Source::Inertia;
        a.premises.push_back(grid_[t - 1][c].winner_id);
        return a;
      }
      case CandKind::Rule: {
        int body_t = rules_[k.ref].source->kind == RuleKind::Causal ? t - 1 : t;
        return rule_argument(k.ref, t, body_t);
      }
    }
    return {};
  }

  void add_universal(Argument a) {
    if (seen_ids_.insert(a.id).second) universal_.push_back(std::move(a));
  }

  const GroundProgram& g_;
  int session_;
  int horizon_;
  PriorityClosure priorities_;

  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Term> concepts_;
  std::vector<ConceptKind> kinds_;
  std::vector<CompiledRule> rules_;
  std::vector<std::size_t> property_, causal_, preclusion_;
  std::vector<std::vector<std::size_t>> property_by_body_;

  std::vector<std::vector<Settled>> grid_;  // [t][concept]
  std::vector<bool> ever_fired_;

  std::vector<Argument> universal_;
  std::unordered_set<std::string> seen_ids_;
  std::set<std::string> acceptable_;
  std::set<std::pair<std::string, std::string>> qualified_;
};

SessionResult build_full(const GroundProgram& g, int session, int horizon) {
  Engine e(g, session, horizon);
  e.run();
  return e.result();
}

std::vector<std::string> difference(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void strip(ArgumentReport& r, const TraceSet& trace) {
  if (!trace.universal) r.universal.clear();
  if (!trace.acceptable) r.acceptable.clear();
  if (!trace.retracted) r.retracted.clear();
  if (!trace.elaborated) r.elaborated.clear();
  if (!trace.qualified) r.qualified.clear();
}

}  // namespace

Resolution resolve_cell(const std::vector<Candidate>& candidates,
                        const PriorityClosure& priorities) {
  std::vector<Contender> cs;
  cs.reserve(candidates.size());
  for (const auto& c : candidates) {
    Tier tier = tier_of(c.source.kind);
    cs.push_back({c.literal.negative, tier,
                  tier == Tier::Rule && c.source.rule ? &*c.source.rule : nullptr});
  }
  // A rule support without a label cannot take part in priority comparisons.
  static const RuleLabel kAnonymous{};
  for (auto& c : cs)
    if (c.tier == Tier::Rule && !c.label) c.label = &kAnonymous;

  Outcome o = resolve_contenders(cs, priorities);
  Resolution r;
  r.value = o.value;
  r.winner = o.winner;
  r.survivors = std::move(o.survivors);
  if (o.winner) r.provenance = candidates[*o.winner].source;
  return r;
}

ConceptKind classify_concept(const Domain& d, const Term& atom) {
  return classify(d.observations, d.fluents, atom);
}

ConceptKind classify_concept(const GroundProgram& g, const Term& atom) {
  return classify(g.observations, g.fluent_patterns, atom);
}

namespace {

int max_time_point(const std::vector<Observation>& obs,
                   const std::vector<Question>& questions) {
  int best = -1;
  for (const auto& o : obs)
    if (!o.time.is_always()) best = std::max(best, o.time.point());
  for (const auto& q : questions)
    for (const auto& c : q.choices) best = std::max(best, c.t);
  return best;
}

}  // namespace

int compute_horizon(const Domain& d, int slack) {
  int best = max_time_point(d.observations, d.questions);
  return best < 0 ? slack : best + slack;
}

int compute_horizon(const GroundProgram& g, int slack) {
  int best = max_time_point(g.observations, g.questions);
  return best < 0 ? slack : best + slack;
}

SessionResult build_model(const GroundProgram& g, int session, int horizon,
                          const TraceSet& trace) {
  SessionResult r = build_full(g, session, horizon);
  if ((trace.retracted || trace.elaborated) && session > 0) {
    SessionResult prev = build_full(g, session - 1, horizon);
    r.report.retracted = difference(prev.report.acceptable, r.report.acceptable);
    r.report.elaborated = difference(r.report.acceptable, prev.report.acceptable);
  }
  strip(r.report, trace);
  return r;
}

Answer answer_question(const ComprehensionModel& m, const Question& q) {
  Answer a;
  a.question_id = q.id;
  std::size_t true_count = 0;
  for (std::size_t i = 0; i < q.choices.size(); ++i) {
    const Choice& c = q.choices[i];
    if (c.t < 0 || c.t > m.horizon) throw TimeOutOfRange(q.id, c.t, m.horizon);
    TruthValue v = TruthValue::Unknown;
    if (const Cell* cell = m.find(c.literal.atom, c.t);
        cell && cell->value != TruthValue::Unknown) {
      bool positive = cell->value == TruthValue::True;
      v = positive != c.literal.negative ? TruthValue::True : TruthValue::False;
    }
    if (v == TruthValue::True) {
      ++true_count;
      a.selected = i;
    }
    a.per_choice.emplace_back(i, v);
  }
  if (true_count != 1) a.selected.reset();
  return a;
}

std::vector<SessionResult> run_sessions(const Domain& d, int slack,
                                        const TraceSet& trace,
                                        const SessionCallback& on_session) {
  std::vector<SessionDecl> decls = d.sessions;
  if (decls.empty()) decls.push_back(SessionDecl{0, {}, Visibility{}});
  std::stable_sort(decls.begin(), decls.end(),
                   [](const SessionDecl& a, const SessionDecl& b) {
                     return a.session < b.session;
                   });

  const GroundProgram g = ground_domain(d);
  const int horizon = compute_horizon(d, slack);

  std::vector<SessionResult> out;
  std::vector<std::string> prev_acceptable;
  for (std::size_t i = 0; i < decls.size(); ++i) {
    SessionResult r = build_full(g, decls[i].session, horizon);
    r.visible = decls[i].visible;
    for (int qid : decls[i].questions) {
      auto it = std::find_if(d.questions.begin(), d.questions.end(),
                             [&](const Question& q) { return q.id == qid; });
      if (it != d.questions.end()) r.answers.push_back(answer_question(r.model, *it));
    }
    if (i > 0) {
      r.report.retracted = difference(prev_acceptable, r.report.acceptable);
      r.report.elaborated = difference(r.report.acceptable, prev_acceptable);
    }
    prev_acceptable = r.report.acceptable;
    strip(r.report, trace);
    if (on_session) on_session(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace star
