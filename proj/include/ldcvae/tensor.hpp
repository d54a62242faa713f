#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ldcvae/error.hpp"

namespace ldc::diff {

using Shape = std::vector<std::size_t>;

std::size_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

enum class Op {
  leaf,
  matmul,
  add,
  sub,
  mul,
  div,
  exp,
  log,
  softmax_lastdim,
  sigmoid,
  tanh,
  relu,
  sum,
  mean,
  transpose,
  concat,
  slice,
  broadcast,
  square,
  sqrt,
  layernorm_lastdim,
};

const char* op_name(Op op);

namespace detail {
struct Node {
  Shape shape;
  std::vector<double> data;
  bool requires_grad = false;
  std::vector<double> grad;  // filled by Graph::backward
  int index = -1;            // construction order within the owning graph
  std::uint64_t graph_id = 0;
};
}  // namespace detail

// Value handle into a Graph. Cheap to copy; the underlying buffer is shared.
class Tensor {
 public:
  Tensor() = default;

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const { return node_->shape; }
  std::size_t numel() const { return node_->data.size(); }
  const std::vector<double>& data() const { return node_->data; }
  bool requires_grad() const { return node_->requires_grad; }
  bool has_grad() const { return !node_->grad.empty(); }
  const std::vector<double>& grad() const;
  double scalar() const;

 private:
  friend class Graph;
  explicit Tensor(std::shared_ptr<detail::Node> n) : node_(std::move(n)) {}
  std::shared_ptr<detail::Node> node_;
};

// Dynamic tape. Built fresh for every optimization step; backward walks the
// records in exact reverse construction order.
class Graph {
 public:
  Graph();

  Tensor leaf(Shape shape, std::vector<double> data, bool requires_grad = false);
  Tensor scalar(double v) { return leaf({}, {v}); }
  Tensor full(Shape shape, double v);

  Tensor matmul(const Tensor& a, const Tensor& b);
  Tensor add(const Tensor& a, const Tensor& b);
  Tensor sub(const Tensor& a, const Tensor& b);
  Tensor mul(const Tensor& a, const Tensor& b);
  Tensor div(const Tensor& a, const Tensor& b);
  Tensor exp(const Tensor& x);
  Tensor log(const Tensor& x);
  Tensor sigmoid(const Tensor& x);
  Tensor tanh(const Tensor& x);
  Tensor relu(const Tensor& x);
  Tensor square(const Tensor& x);
  Tensor sqrt(const Tensor& x);
  Tensor softmax_lastdim(const Tensor& x);
  // y = (x - mean)/std(x, last dim) * gain + bias; gain/bias are 1-d of the
  // last extent.
  Tensor layernorm_lastdim(const Tensor& x, const Tensor& gain, const Tensor& bias);
  Tensor sum(const Tensor& x);
  Tensor mean(const Tensor& x);
  Tensor transpose(const Tensor& x);  // 2-d only
  Tensor concat(const std::vector<Tensor>& parts, std::size_t axis);
  Tensor slice(const Tensor& x, std::size_t axis, std::size_t begin, std::size_t end);
  Tensor broadcast(const Tensor& x, Shape target);

  // composites built from the primitives above
  Tensor scale(const Tensor& x, double c);
  Tensor add_scalar(const Tensor& x, double c);
  Tensor affine(const Tensor& x, const Tensor& w, const Tensor& b);  // x@w + b
  Tensor clamp(const Tensor& x, double lo, double hi);
  Tensor dot(const Tensor& a, const Tensor& b);

  // Populates grad on every requires_grad leaf reachable from loss (zero for
  // unreachable ones). loss must be a scalar from this graph.
  void backward(const Tensor& loss);

  std::size_t node_count() const { return records_.size(); }

  struct RecordView {
    Op op;
    std::vector<int> inputs;
    int output;
  };
  // tape inspection (tests assert the topological invariants on this)
  std::vector<RecordView> tape() const;

 private:
  struct Record {
    Op op;
    std::vector<std::shared_ptr<detail::Node>> in;
    std::shared_ptr<detail::Node> out;
    std::size_t axis = 0;
    std::size_t begin = 0;
    std::size_t end = 0;
    std::vector<double> aux;  // op-specific saved activations
  };

  std::shared_ptr<detail::Node> make_node(Shape shape, bool requires_grad);
  Tensor unary(Op op, const Tensor& x, const std::function<double(double)>& f);
  Tensor binary_elementwise(Op op, const Tensor& a, const Tensor& b);
  void check_same_graph(const Tensor& t) const;
  static void ensure_grad(detail::Node& n);
  void backward_record(const Record& r);

  std::vector<Record> records_;
  std::vector<std::shared_ptr<detail::Node>> leaves_;
  std::uint64_t id_ = 0;
  int next_index_ = 0;
};

// f: builds a scalar loss from one input tensor on the provided graph.
using TensorFn = std::function<Tensor(Graph&, const Tensor&)>;

// Max over coordinates of |analytic - central difference| / (|analytic| + 1e-8).
double finite_difference_check(const TensorFn& f, const Shape& xshape,
                               const std::vector<double>& xdata,
                               double step = 1e-5);

// Same, probing only the given coordinates (for large parameter tensors).
double finite_difference_check_subset(const TensorFn& f, const Shape& xshape,
                                      const std::vector<double>& xdata,
                                      const std::vector<std::size_t>& coords,
                                      double step = 1e-5);

}  // namespace ldc::diff
