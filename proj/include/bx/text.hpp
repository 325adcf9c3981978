#pragma once

#include <string>
#include <string_view>

#include "bx/scheme.hpp"

namespace bx {

// Text forms of the scheme types:
//
//   update := state{post=V} | states{pre=V, post=V}
//           | delta{pre=V, post=V, same=REL} | edits[OP, ...]
//           | stateedits{pre=V, edits=[OP, ...]} | opaque{"tag"}
//   trace  := none | state{V} | compl{V} | delta{src=V, tgt=V, same=REL}
//   REL    := [(PATH, PATH), ...]
//   PATH   := / | (/left | /right | /N | /.name)+
//   OP     := ins(i, V) | del(i, V) | rep(i, V, V) | set(name, V, V) | root(V, V)
//
// Parsers throw Error{ParseError} with the byte offset as detail. Input that
// is well-formed but violates a constructor invariant (a sameness link to a
// missing path, edits that do not apply) keeps the constructor's error kind.

std::string render_op(const EditOp& op);
std::string render_update(const Update& u);
std::string render_trace(const Traceability& t);

Path parse_path(std::string_view text);
SamenessRelation parse_relation(std::string_view text);
EditOp parse_op(std::string_view text);
Update parse_update(std::string_view text);
Traceability parse_trace(std::string_view text);

}  // namespace bx
