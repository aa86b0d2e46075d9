#pragma once

#include <functional>
#include <memory>
#include <string>

namespace alglen {

// A fully bracketed non-associative product: a binary tree whose leaves
// carry generator (or variable) indices. Immutable; subtrees are shared.
class Word {
 public:
  static Word leaf(int index);
  static Word product(const Word& l, const Word& r);

  bool is_leaf() const { return node_->leaf >= 0; }
  int index() const { return node_->leaf; }
  Word left() const { return Word(node_->l); }
  Word right() const { return Word(node_->r); }

  // Number of leaves ("letters").
  int length() const { return node_->len; }
  int max_index() const;

  // "((x1*x1)*x1)" style with explicit brackets on every product.
  std::string str(const std::function<std::string(int)>& leaf_name) const;

  // Clone with every leaf index shifted by delta.
  Word shift_leaves(int delta) const;

  bool operator==(const Word& o) const;

 private:
  struct Node {
    int leaf;  // >= 0 for leaves, -1 for products
    int len;
    std::shared_ptr<const Node> l, r;
  };

  explicit Word(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace alglen
