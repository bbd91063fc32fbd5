#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zfa/axiom_audit.hpp"

namespace zfa {

// A model of sets-with-atoms built out of pure sets alone: every element is
// a pure-set pair (payload, tag) where tag 0 reads "I am an atom" (payload a
// von Neumann numeral) and tag 1 reads "I am a set" (payload a set of
// encoded elements). Membership is the relation dot_in below, not the
// ambient one. The stages mirror the native universe's construction
// parameter for parameter, which is what makes the membership isomorphism
// exact.

// --- von Neumann numerals -----------------------------------------------------

inline Element numeral(int n) {
  Element e = Element::empty_set();
  for (int i = 0; i < n; ++i) {
    std::vector<Element> members = e.children();
    members.push_back(e);
    e = Element::set(std::move(members));
  }
  return e;
}

// Returns n when e is the numeral n, otherwise nothing.
inline std::optional<int> numeral_value(const Element& e) {
  if (e.is_atom()) return std::nullopt;
  int n = static_cast<int>(e.children().size());
  if (e == numeral(n)) return n;
  return std::nullopt;
}

// --- tagged elements ----------------------------------------------------------

class TaggedElement {
 public:
  static TaggedElement make(Element payload, int tag) {
    if (tag != 0 && tag != 1)
      throw MalformedTaggedError("tag must be 0 or 1");
    if (payload.is_atom())
      throw MalformedTaggedError("payload must be a pure set");
    TaggedElement e;
    e.payload_ = std::move(payload);
    e.tag_ = tag;
    e.encoded_ = kuratowski_pair(e.payload_, numeral(tag));
    return e;
  }

  // Shallow decode of an encoded pair; member payloads are not validated.
  static TaggedElement decode(const Element& encoded) {
    auto pair = try_decode_pair(encoded);
    if (!pair)
      throw MalformedTaggedError("not a (payload, tag) pair: " +
                                 zfa::to_string(encoded));
    auto tag = numeral_value(pair->second);
    if (!tag || (*tag != 0 && *tag != 1))
      throw MalformedTaggedError("tag is not the numeral 0 or 1: " +
                                 zfa::to_string(encoded));
    return make(pair->first, *tag);
  }

  const Element& payload() const { return payload_; }
  int tag() const { return tag_; }
  const Element& encoded() const { return encoded_; }
  bool is_atom_tagged() const { return tag_ == 0; }
  bool is_set_tagged() const { return tag_ == 1; }

  friend bool operator==(const TaggedElement& a, const TaggedElement& b) {
    return a.encoded_ == b.encoded_;
  }
  friend bool operator!=(const TaggedElement& a, const TaggedElement& b) {
    return !(a == b);
  }
  friend bool operator<(const TaggedElement& a, const TaggedElement& b) {
    return a.encoded_ < b.encoded_;
  }

 private:
  TaggedElement() : payload_(Element::empty_set()), encoded_(payload_) {}
  Element payload_;
  int tag_ = 0;
  Element encoded_;
};

inline std::string to_string(const TaggedElement& e) {
  return "(" + to_string(e.payload()) + ", " + std::to_string(e.tag()) + ")";
}

// Deep well-formedness: tag-0 payloads are numerals below the atom count,
// tag-1 payloads contain only well-formed encodings.
inline bool is_wellformed_tagged(const Element& encoded, int num_atoms) {
  auto pair = try_decode_pair(encoded);
  if (!pair) return false;
  auto tag = numeral_value(pair->second);
  if (!tag || (*tag != 0 && *tag != 1)) return false;
  if (pair->first.is_atom()) return false;
  if (*tag == 0) {
    auto n = numeral_value(pair->first);
    return n && *n < num_atoms;
  }
  for (const Element& member : pair->first.children())
    if (!is_wellformed_tagged(member, num_atoms)) return false;
  return true;
}

// --- the interpreted relations --------------------------------------------------

// The four-case membership: nothing is in an atom-tagged element; membership
// in a set-tagged element is ambient membership of the encoding in the
// payload.
inline bool dot_in(const TaggedElement& x, const TaggedElement& y) {
  if (y.tag() == 0) return false;
  return y.payload().contains(x.encoded());
}

// x ⊆̇ y: every dot-member of x is a dot-member of y. Atom-tagged elements
// have no dot-members, so they are subsets of everything.
inline bool dot_subseteq(const TaggedElement& x, const TaggedElement& y) {
  if (x.tag() == 0) return true;
  if (x.payload().children().empty()) return true;
  if (y.tag() == 0) return false;
  return subset_of(x.payload(), y.payload());
}

// The decoded dot-members of a set-tagged element.
inline std::vector<TaggedElement> tagged_members(const TaggedElement& e) {
  std::vector<TaggedElement> out;
  if (e.tag() == 0) return out;
  out.reserve(e.payload().children().size());
  for (const Element& member : e.payload().children())
    out.push_back(TaggedElement::decode(member));
  return out;
}

// Rank measure mirroring the native one: atom-tags and the empty set-tag are
// 0; otherwise one more than the largest member.
inline int tagged_rank(const TaggedElement& e) {
  if (e.tag() == 0) return 0;
  int r = 0;
  for (const TaggedElement& member : tagged_members(e))
    r = std::max(r, 1 + tagged_rank(member));
  return r;
}

// The pointwise action transported to the tagged world: permute the numeral
// of atom-tags, recurse through set-tags.
inline TaggedElement tagged_act(const Perm& p, const TaggedElement& e) {
  if (e.tag() == 0) {
    auto n = numeral_value(e.payload());
    if (!n) throw MalformedTaggedError("atom-tag payload is not a numeral");
    return TaggedElement::make(numeral(p(Atom{*n}).id), 0);
  }
  std::vector<Element> members;
  for (const TaggedElement& member : tagged_members(e))
    members.push_back(tagged_act(p, member).encoded());
  return TaggedElement::make(Element::set(std::move(members)), 1);
}

// --- interpreted set formers -----------------------------------------------------

inline TaggedElement n_set(std::vector<TaggedElement> members) {
  std::vector<Element> encoded;
  encoded.reserve(members.size());
  for (const TaggedElement& m : members) encoded.push_back(m.encoded());
  return TaggedElement::make(Element::set(std::move(encoded)), 1);
}

inline TaggedElement n_empty() { return n_set({}); }

inline TaggedElement n_atoms(int num_atoms) {
  std::vector<TaggedElement> members;
  for (int i = 0; i < num_atoms; ++i)
    members.push_back(TaggedElement::make(numeral(i), 0));
  return n_set(std::move(members));
}

inline TaggedElement n_pairset(const TaggedElement& x,
                               const TaggedElement& y) {
  return n_set({x, y});
}

// Members of members, with atom-tagged members contributing nothing.
inline TaggedElement n_union(const TaggedElement& x) {
  if (x.tag() == 0) throw NotASetError("union of an atom-tagged element");
  std::vector<TaggedElement> members;
  for (const TaggedElement& m : tagged_members(x))
    if (m.tag() == 1)
      for (const TaggedElement& g : tagged_members(m)) members.push_back(g);
  return n_set(std::move(members));
}

inline TaggedElement n_powerset(const TaggedElement& x) {
  if (x.tag() == 0) throw NotASetError("powerset of an atom-tagged element");
  std::vector<TaggedElement> xs = tagged_members(x);
  if (xs.size() > 20) throw BudgetError("powerset of a tagged set this large", 0);
  std::vector<TaggedElement> subsets;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << xs.size());
       ++mask) {
    std::vector<TaggedElement> subset;
    for (std::size_t k = 0; k < xs.size(); ++k)
      if (mask & (std::uint32_t{1} << k)) subset.push_back(xs[k]);
    subsets.push_back(n_set(std::move(subset)));
  }
  return n_set(std::move(subsets));
}

template <typename Pred>
TaggedElement n_comprehension(const TaggedElement& domain, Pred&& pred) {
  std::vector<TaggedElement> kept;
  for (const TaggedElement& m : tagged_members(domain))
    if (pred(m)) kept.push_back(m);
  return n_set(std::move(kept));
}

// Kuratowski pairs built inside the tagged model.
inline TaggedElement tagged_kuratowski(const TaggedElement& x,
                                       const TaggedElement& y) {
  return n_pairset(n_pairset(x, y), n_pairset(x, x));
}

inline std::optional<std::pair<TaggedElement, TaggedElement>>
tagged_decode_pair(const TaggedElement& e) {
  if (e.tag() == 0) return std::nullopt;
  std::vector<TaggedElement> members = tagged_members(e);
  for (const TaggedElement& m : members)
    if (m.tag() == 0) return std::nullopt;
  if (members.size() == 1) {
    if (tagged_members(members[0]).size() != 1) return std::nullopt;
    TaggedElement x = tagged_members(members[0])[0];
    return std::make_pair(x, x);
  }
  if (members.size() != 2) return std::nullopt;
  // One member is the singleton {x}, the other the doubleton {x, y}.
  std::size_t singleton = tagged_members(members[0]).size() == 1 ? 0 : 1;
  std::size_t doubleton = 1 - singleton;
  std::vector<TaggedElement> s = tagged_members(members[singleton]);
  std::vector<TaggedElement> d = tagged_members(members[doubleton]);
  if (s.size() != 1 || d.size() != 2) return std::nullopt;
  const TaggedElement& x = s[0];
  if (!dot_in(x, members[doubleton])) return std::nullopt;
  const TaggedElement& y = d[0] == x ? d[1] : d[0];
  return std::make_pair(x, y);
}

// --- stages ---------------------------------------------------------------------

class TaggedStages {
 public:
  int num_atoms() const { return num_atoms_; }
  const UniverseConfig& config() const { return cfg_; }
  const std::vector<std::vector<TaggedElement>>& stages() const {
    return stages_;
  }
  const std::vector<TaggedElement>& all() const { return all_; }
  std::size_t size() const { return all_.size(); }

  bool contains(const TaggedElement& e) const {
    return index_.count(e.encoded()) != 0;
  }
  bool contains_encoded(const Element& encoded) const {
    return index_.count(encoded) != 0;
  }
  bool stage_capped(int stage) const {
    return stage >= 0 && stage < static_cast<int>(stage_capped_.size()) &&
           stage_capped_[static_cast<std::size_t>(stage)];
  }

  // Mirror of Universe::within_budget_rules over tagged elements.
  bool within_budget_rules(const TaggedElement& e) const {
    if (contains(e)) return true;
    if (e.tag() == 0) {
      auto n = numeral_value(e.payload());
      return n && *n < num_atoms_;
    }
    int r = tagged_rank(e);
    if (r > cfg_.rank_bound) return false;
    for (const Element& member : e.payload().children())
      if (!contains_encoded(member)) return false;
    if (static_cast<int>(e.payload().children().size()) <= cfg_.subset_cap)
      return true;
    for (int s = r; s <= cfg_.rank_bound; ++s)
      if (!stage_capped(s)) return true;
    return false;
  }

  friend TaggedStages build_N(int num_atoms, UniverseConfig cfg);

 private:
  int num_atoms_ = 0;
  UniverseConfig cfg_;
  std::vector<std::vector<TaggedElement>> stages_;
  std::vector<TaggedElement> all_;
  std::set<Element> index_;
  std::vector<bool> stage_capped_;
};

// Builds the tagged stages with the same staging policy as
// generate_universe: stage 0 holds the atom-tagged numerals and the empty
// set-tag, later stages wrap subsets of everything built so far. Matching
// the parameters of a native universe makes the two constructions
// membership-isomorphic.
inline TaggedStages build_N(int num_atoms, UniverseConfig cfg = {}) {
  if (num_atoms < 1) throw Error("tagged model needs at least one atom");
  if (cfg.rank_bound < 0) throw Error("rank bound must be nonnegative");
  TaggedStages st;
  st.num_atoms_ = num_atoms;
  st.cfg_ = cfg;
  st.stage_capped_.assign(static_cast<std::size_t>(cfg.rank_bound) + 1, false);

  std::vector<TaggedElement> current;
  auto add = [&](TaggedElement e) -> bool {
    if (!st.index_.insert(e.encoded()).second) return false;
    current.push_back(e);
    return true;
  };

  std::vector<TaggedElement> stage0;
  for (int i = 0; i < num_atoms; ++i)
    stage0.push_back(TaggedElement::make(numeral(i), 0));
  stage0.push_back(n_empty());
  for (const TaggedElement& e : stage0) add(e);
  st.stages_.push_back(stage0);

  for (int stage = 1; stage <= cfg.rank_bound; ++stage) {
    std::vector<TaggedElement> base = current;
    bool full = static_cast<int>(base.size()) <= cfg.full_closure_limit;
    std::uint64_t projected;
    if (full) {
      projected = std::uint64_t{1} << base.size();
    } else {
      projected = 0;
      for (int j = 0; j <= cfg.subset_cap; ++j)
        projected = detail::saturating_add(
            projected,
            detail::binomial(base.size(), static_cast<std::uint64_t>(j)));
    }
    std::uint64_t total = detail::saturating_add(projected, current.size());
    if (total > cfg.max_elements)
      throw BudgetError("tagged stage budget exceeded at stage " +
                            std::to_string(stage) + ": projected " +
                            std::to_string(total) + " elements",
                        static_cast<std::size_t>(total));
    st.stage_capped_[static_cast<std::size_t>(stage)] = !full;
    std::vector<TaggedElement> added;
    auto admit = [&](std::vector<TaggedElement> subset) {
      TaggedElement e = n_set(std::move(subset));
      if (add(e)) added.push_back(e);
    };
    if (full) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << base.size());
           ++mask) {
        std::vector<TaggedElement> subset;
        for (std::size_t i = 0; i < base.size(); ++i)
          if (mask & (std::uint64_t{1} << i)) subset.push_back(base[i]);
        admit(std::move(subset));
      }
    } else {
      std::vector<std::size_t> idx;
      admit({});
      for (int size = 1; size <= cfg.subset_cap; ++size) {
        if (size > static_cast<int>(base.size())) break;
        idx.assign(static_cast<std::size_t>(size), 0);
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        while (true) {
          std::vector<TaggedElement> subset;
          subset.reserve(idx.size());
          for (std::size_t i : idx) subset.push_back(base[i]);
          admit(std::move(subset));
          int pos = size - 1;
          while (pos >= 0 &&
                 idx[static_cast<std::size_t>(pos)] ==
                     base.size() - static_cast<std::size_t>(size - pos))
            --pos;
          if (pos < 0) break;
          ++idx[static_cast<std::size_t>(pos)];
          for (std::size_t i = static_cast<std::size_t>(pos) + 1;
               i < idx.size(); ++i)
            idx[i] = idx[i - 1] + 1;
        }
      }
    }
    st.stages_.push_back(std::move(added));
  }

  std::vector<std::pair<std::pair<int, std::string>, TaggedElement>> keyed;
  keyed.reserve(current.size());
  for (TaggedElement& e : current) {
    std::pair<int, std::string> key{tagged_rank(e), to_string(e)};
    keyed.emplace_back(std::move(key), std::move(e));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  st.all_.reserve(keyed.size());
  for (auto& [key, e] : keyed) st.all_.push_back(std::move(e));
  return st;
}

inline TaggedStages build_N(int num_atoms, int rank_bound, int subset_cap) {
  UniverseConfig cfg;
  cfg.rank_bound = rank_bound;
  cfg.subset_cap = subset_cap;
  return build_N(num_atoms, cfg);
}

// Stage-checked interpreted operations.
enum class NOp { pair, powerset, union_op, empty, atoms };

inline TaggedElement n_interpret(const TaggedStages& st, NOp op,
                                 const std::vector<TaggedElement>& args) {
  TaggedElement result = [&] {
    switch (op) {
      case NOp::pair:
        if (args.size() != 2) throw Error("pair takes two arguments");
        return n_pairset(args[0], args[1]);
      case NOp::powerset:
        if (args.size() != 1) throw Error("powerset takes one argument");
        return n_powerset(args[0]);
      case NOp::union_op:
        if (args.size() != 1) throw Error("union takes one argument");
        return n_union(args[0]);
      case NOp::empty:
        return n_empty();
      case NOp::atoms:
        return n_atoms(st.num_atoms());
    }
    throw Error("unknown interpreted operation");
  }();
  if (!st.contains(result))
    throw OutOfStageError(
        "interpreted operation left the built stages: " + to_string(result),
        to_string(result));
  return result;
}

// Stage-checked interpreted comprehension.
template <typename Pred>
TaggedElement n_interpret_comprehension(const TaggedStages& st,
                                        const TaggedElement& domain,
                                        Pred&& pred) {
  TaggedElement result = n_comprehension(domain, std::forward<Pred>(pred));
  if (!st.contains(result))
    throw OutOfStageError(
        "interpreted comprehension left the built stages: " +
            to_string(result),
        to_string(result));
  return result;
}

// --- the tagged construction as an audit model -----------------------------------

class TaggedAuditModel {
 public:
  using Elem = TaggedElement;

  explicit TaggedAuditModel(const TaggedStages& st)
      : st_(&st), perms_(enumerate_perms(AtomPool(st.num_atoms()))) {}

  const std::vector<TaggedElement>& elements() const { return st_->all(); }
  bool is_atom(const TaggedElement& e) const { return e.tag() == 0; }
  bool is_set(const TaggedElement& e) const { return e.tag() == 1; }
  bool equal(const TaggedElement& a, const TaggedElement& b) const {
    return a == b;
  }
  bool member(const TaggedElement& x, const TaggedElement& c) const {
    return dot_in(x, c);
  }
  std::vector<TaggedElement> members(const TaggedElement& e) const {
    return tagged_members(e);
  }
  bool in_model(const TaggedElement& e) const { return st_->contains(e); }
  bool budget_excuses(const TaggedElement& e) const {
    return !st_->within_budget_rules(e);
  }
  TaggedElement mk_set(std::vector<TaggedElement> members) const {
    return n_set(std::move(members));
  }
  TaggedElement empty() const { return n_empty(); }
  TaggedElement atoms_set() const { return n_atoms(st_->num_atoms()); }
  TaggedElement mk_union(const TaggedElement& x) const { return n_union(x); }
  TaggedElement mk_powerset(const TaggedElement& x) const {
    return n_powerset(x);
  }
  TaggedElement kuratowski(const TaggedElement& a,
                           const TaggedElement& b) const {
    return tagged_kuratowski(a, b);
  }
  std::optional<std::pair<TaggedElement, TaggedElement>> decode_kuratowski(
      const TaggedElement& e) const {
    return tagged_decode_pair(e);
  }
  int depth(const TaggedElement& e) const { return tagged_rank(e); }
  const std::vector<Perm>& perms() const { return perms_; }
  TaggedElement act_elem(const Perm& p, const TaggedElement& e) const {
    return tagged_act(p, e);
  }
  std::string show(const TaggedElement& e) const { return to_string(e); }

  // Same instance corpus as the native auditor, phrased through dot_in.
  std::size_t comprehension_body_count() const { return 4; }
  std::string comprehension_body_name(std::size_t i) const {
    static const char* names[] = {"false", "v = v", "v in Atoms",
                                  "~(v = empty)"};
    return names[i];
  }
  bool comprehension_body_holds(std::size_t i, const TaggedElement& x) const {
    switch (i) {
      case 0: return false;
      case 1: return true;
      case 2: return dot_in(x, atoms_set());
      default: return !(x == n_empty());
    }
  }
  TaggedElement comprehend(const TaggedElement& domain, std::size_t i) const {
    return n_comprehension(domain, [&](const TaggedElement& x) {
      return comprehension_body_holds(i, x);
    });
  }

 private:
  const TaggedStages* st_;
  std::vector<Perm> perms_;
};

// Same auditor, same instance corpus, with dot-membership in place of the
// ambient one.
inline std::vector<AxiomReport> audit_N(const TaggedStages& st) {
  return audit_model(TaggedAuditModel(st));
}

// --- the isomorphism check --------------------------------------------------------

struct IsoReport {
  bool parameters_match = false;
  bool injective = false;
  bool surjective = false;
  std::size_t elements_mapped = 0;
  std::size_t membership_pairs_checked = 0;
  std::size_t membership_mismatches = 0;
  std::string first_mismatch;

  bool ok() const {
    return parameters_match && injective && surjective &&
           membership_mismatches == 0;
  }
};

// The canonical map: atom i to (numeral i, 0), a set to the set-tag of its
// members' images. Verifies it is a bijection of the native universe onto
// the stages that translates membership into dot-membership both ways.
inline IsoReport iso_check(const TaggedStages& st, const Universe& u) {
  IsoReport report;
  report.parameters_match =
      st.num_atoms() == u.pool().size() &&
      st.config().rank_bound == u.config().rank_bound &&
      st.config().subset_cap == u.config().subset_cap &&
      st.config().full_closure_limit == u.config().full_closure_limit;

  std::map<Element, TaggedElement> image;
  auto map_elem = [&](auto&& self, const Element& x) -> TaggedElement {
    auto it = image.find(x);
    if (it != image.end()) return it->second;
    TaggedElement mapped = [&] {
      if (x.is_atom()) return TaggedElement::make(numeral(x.as_atom().id), 0);
      std::vector<TaggedElement> members;
      for (const Element& c : x.children()) members.push_back(self(self, c));
      return n_set(std::move(members));
    }();
    image.emplace(x, mapped);
    return mapped;
  };

  std::set<Element> image_encodings;
  for (const Element& x : u.elements()) {
    TaggedElement mapped = map_elem(map_elem, x);
    ++report.elements_mapped;
    image_encodings.insert(mapped.encoded());
    if (!st.contains(mapped) && report.first_mismatch.empty())
      report.first_mismatch = "image of " + to_string(x) +
                              " is outside the stages: " + to_string(mapped);
  }
  report.injective = image_encodings.size() == u.elements().size();
  report.surjective = image_encodings.size() == st.all().size() &&
                      report.first_mismatch.empty();

  for (const Element& x : u.elements()) {
    const TaggedElement& mx = image.at(x);
    for (const Element& y : u.elements()) {
      const TaggedElement& my = image.at(y);
      ++report.membership_pairs_checked;
      bool native = x.is_set() && x.contains(y);
      bool tagged = dot_in(my, mx);
      if (native != tagged) {
        ++report.membership_mismatches;
        if (report.first_mismatch.empty())
          report.first_mismatch =
              to_string(y) + " in " + to_string(x) + " is " +
              (native ? "true" : "false") + " natively but " +
              (tagged ? "true" : "false") + " in the tagged model";
      }
    }
  }
  return report;
}

inline std::string to_string(const IsoReport& r) {
  std::string out = "elements mapped: " + std::to_string(r.elements_mapped);
  out += "\nparameters match: " + std::string(r.parameters_match ? "yes" : "no");
  out += "\ninjective: " + std::string(r.injective ? "yes" : "no");
  out += "\nsurjective: " + std::string(r.surjective ? "yes" : "no");
  out += "\nmembership pairs checked: " +
         std::to_string(r.membership_pairs_checked);
  out += "\nmembership mismatches: " +
         std::to_string(r.membership_mismatches);
  if (!r.first_mismatch.empty()) out += "\nfirst mismatch: " + r.first_mismatch;
  return out;
}

// Axiom-by-axiom verdict comparison of two audit runs.
inline std::vector<std::string> audit_verdict_mismatches(
    const std::vector<AxiomReport>& a, const std::vector<AxiomReport>& b) {
  std::vector<std::string> out;
  if (a.size() != b.size()) {
    out.push_back("different axiom counts");
    return out;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].axiom != b[i].axiom)
      out.push_back("axiom order differs: " + a[i].axiom + " vs " +
                    b[i].axiom);
    else if (a[i].status != b[i].status)
      out.push_back(a[i].axiom + ": " + to_string(a[i].status) + " vs " +
                    to_string(b[i].status));
  }
  return out;
}

}  // namespace zfa
