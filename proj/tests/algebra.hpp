#pragma once

// Algebraic laws of the scheme operators, checked over a whole universe.
// Each checker returns the list of violations as human-readable strings.

#include <string>
#include <vector>

#include "bx/text.hpp"
#include "universes.hpp"

namespace bx::testing {

using Violations = std::vector<std::string>;

inline Violations check_involution(const std::vector<Update>& us) {
  Violations bad;
  for (const auto& u : us)
    if (invert_update(invert_update(u)) != u) bad.push_back("involution: " + render_update(u));
  return bad;
}

inline Violations check_seams(const std::vector<Update>& us) {
  Violations bad;
  std::vector<std::optional<Value>> pre, post;
  for (const auto& u : us) {
    pre.push_back(try_delta_of(u));
    post.push_back(try_rho_of(u));
  }
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < us.size(); ++j) {
      const auto &u1 = us[i], &u2 = us[j];
      if (post[i] && pre[j] && *post[i] != *pre[j]) {
        // Rejection goes through an exception; sample it rather than pay for
        // every mismatched pair.
        if (rejected++ % 61 != 0) continue;
        try {
          compose_updates(u2, u1);
          bad.push_back("seam accepted: " + render_update(u2) + " after " + render_update(u1));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SeamMismatch) bad.push_back(std::string("wrong error: ") + e.what());
        }
        continue;
      }
      Update c = compose_updates(u2, u1);
      if (try_delta_of(c) != pre[i] || try_rho_of(c) != post[j])
        bad.push_back("seam: " + render_update(u2) + " after " + render_update(u1));
    }
  return bad;
}

// For SS and D the composite with an identity is the update itself; for
// E/SE equality is on applied states.
inline Violations check_identities(const std::vector<Update>& us) {
  Violations bad;
  for (const auto& u : us) {
    const auto repr = u.repr();
    if (repr == UpdateRepr::Edits) {
      const auto id = identity_update(I(0), repr);
      for (const auto& a : small_lists()) {
        auto direct = try_apply(u.as<EditsU>().ops, a);
        auto l = try_apply(compose_updates(id, u).as<EditsU>().ops, a);
        auto r = try_apply(compose_updates(u, id).as<EditsU>().ops, a);
        if (direct != l || direct != r) bad.push_back("identity: " + render_update(u));
      }
      continue;
    }
    const auto pre = delta_of(u), post = rho_of(u);
    const auto lid = identity_update(post, repr), rid = identity_update(pre, repr);
    if (delta_of(lid) != rho_of(lid) || delta_of(rid) != rho_of(rid))
      bad.push_back("identity endpoints: " + render_update(u));
    auto l = compose_updates(lid, u), r = compose_updates(u, rid);
    if (repr == UpdateRepr::StateEdits) {
      if (rho_of(l) != post || rho_of(r) != post || delta_of(l) != pre || delta_of(r) != pre)
        bad.push_back("identity: " + render_update(u));
    } else if (l != u || r != u) {
      bad.push_back("identity: " + render_update(u));
    }
  }
  return bad;
}

// Applying ops then their inverse restores every compatible pre-state.
inline Violations check_edit_soundness(const std::vector<Update>& us) {
  Violations bad;
  for (const auto& u : us) {
    const auto& ops = u.repr() == UpdateRepr::Edits ? u.as<EditsU>().ops : u.as<StateEditsU>().ops;
    const auto inv = invert_update(u);
    const auto& inv_ops = inv.repr() == UpdateRepr::Edits ? inv.as<EditsU>().ops : inv.as<StateEditsU>().ops;
    for (const auto& a : small_lists()) {
      auto post = try_apply(ops, a);
      if (!post) continue;
      auto back = try_apply(inv_ops, *post);
      if (!back || *back != a) bad.push_back("edit soundness: " + render_update(u) + " on " + render_value(a));
    }
  }
  return bad;
}

inline Violations check_preorder(const std::vector<Update>& us) {
  Violations bad;
  const auto pre = default_preorder(us.front().repr());
  // Agreement with the size measure gives transitivity for free.
  for (const auto& x : us) {
    if (!pre.leq(x, x)) bad.push_back("reflexivity: " + render_update(x));
    for (const auto& y : us) {
      const bool xy = pre.leq(x, y), yx = pre.leq(y, x);
      if (!xy && !yx) bad.push_back("totality: " + render_update(x) + " vs " + render_update(y));
      if (xy != (update_size(x) <= update_size(y))) bad.push_back("measure: " + render_update(x));
    }
  }
  return bad;
}

}  // namespace bx::testing
