#include "alglen/word.hpp"

#include <algorithm>

#include "alglen/errors.hpp"

namespace alglen {

Word Word::leaf(int index) {
  if (index < 0) throw validation_error("negative leaf index");
  auto n = std::make_shared<Node>();
  n->leaf = index;
  n->len = 1;
  return Word(std::move(n));
}

Word Word::product(const Word& l, const Word& r) {
  auto n = std::make_shared<Node>();
  n->leaf = -1;
  n->len = l.length() + r.length();
  n->l = l.node_;
  n->r = r.node_;
  return Word(std::move(n));
}

int Word::max_index() const {
  if (is_leaf()) return index();
  return std::max(left().max_index(), right().max_index());
}

std::string Word::str(const std::function<std::string(int)>& leaf_name) const {
  if (is_leaf()) return leaf_name(index());
  return "(" + left().str(leaf_name) + "*" + right().str(leaf_name) + ")";
}

Word Word::shift_leaves(int delta) const {
  if (is_leaf()) return leaf(index() + delta);
  return product(left().shift_leaves(delta), right().shift_leaves(delta));
}

bool Word::operator==(const Word& o) const {
  if (node_ == o.node_) return true;
  if (is_leaf() != o.is_leaf()) return false;
  if (is_leaf()) return index() == o.index();
  return length() == o.length() && left() == o.left() && right() == o.right();
}

}  // namespace alglen
