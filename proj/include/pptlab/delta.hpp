#ifndef PPTLAB_DELTA_HPP
#define PPTLAB_DELTA_HPP

#include <map>
#include <memory>
#include <mutex>

#include "pptlab/poly.hpp"

namespace pptlab {

// Delta(a) = (a^p - phi(a)) / p reduced mod p, where phi(x_i) = x_i^p.  Only
// the class of a mod p^2 is needed, so the computation lives in Z/p^2.
ResPoly delta(const LiftPoly& f);

// A validated hypersurface element f of A: (p, f) is a regular sequence and f
// lies in the maximal ideal.  Holds f mod p^2, f mod p, Delta(f), and a
// thread-safe insert-once cache of the powers of f-bar and Delta(f).
class HypersurfaceInput {
 public:
  // Throws FDivisibleByP when f = 0 mod p and FIsUnit when f(0) is a unit.
  static HypersurfaceInput validate(const LiftPoly& f);

  const ContextPtr& context_ptr() const { return f_lift_.context_ptr(); }
  const Context& context() const { return f_lift_.context(); }
  unsigned p() const { return context().p(); }

  const LiftPoly& f_lift() const { return f_lift_; }
  const ResPoly& f_res() const { return f_res_; }
  const ResPoly& delta_f() const { return delta_f_; }

  // Delta(f)^l for 0 <= l <= p-1; InvalidIndex otherwise.
  const ResPoly& delta_power(unsigned l) const;
  // f-bar^k for 0 <= k <= p.
  const ResPoly& f_power(unsigned k) const;

 private:
  HypersurfaceInput(LiftPoly f_lift, ResPoly f_res, ResPoly delta_f);

  struct Memo {
    std::mutex mu;
    std::map<unsigned, std::unique_ptr<const ResPoly>> delta_pows;
    std::map<unsigned, std::unique_ptr<const ResPoly>> f_pows;
  };

  const ResPoly& memoized(std::map<unsigned, std::unique_ptr<const ResPoly>>& table,
                          unsigned k, const ResPoly& base) const;

  LiftPoly f_lift_;
  ResPoly f_res_;
  ResPoly delta_f_;
  std::shared_ptr<Memo> memo_;
};

}  // namespace pptlab

#endif
