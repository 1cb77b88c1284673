#include "pptlab/delta.hpp"

#include "pptlab/errors.hpp"

namespace pptlab {

ResPoly delta(const LiftPoly& f) {
  const LiftPoly numerator = pow(f, f.context().p()) - frobenius_substitute(f);
  try {
    return exact_div_p(numerator);
  } catch (const Error& e) {
    // a^p = phi(a) mod p always holds, so this is an arithmetic bug
    throw Error(ErrorKind::NotDivisible,
                std::string("internal: Delta numerator not divisible by p: ") +
                    e.what());
  }
}

HypersurfaceInput::HypersurfaceInput(LiftPoly f_lift, ResPoly f_res,
                                     ResPoly delta_f)
    : f_lift_(std::move(f_lift)),
      f_res_(std::move(f_res)),
      delta_f_(std::move(delta_f)),
      memo_(std::make_shared<Memo>()) {}

HypersurfaceInput HypersurfaceInput::validate(const LiftPoly& f) {
  ResPoly f_res = project_mod_p(f);
  if (f_res.is_zero())
    throw Error(ErrorKind::FDivisibleByP,
                "f is divisible by p, so (p, f) is not a regular sequence");
  if (f_res.constant_term() != 0)
    throw Error(ErrorKind::FIsUnit,
                "f has a unit constant term, so A/f is the zero ring");
  ResPoly d = delta(f);
  return HypersurfaceInput(f, std::move(f_res), std::move(d));
}

const ResPoly& HypersurfaceInput::memoized(
    std::map<unsigned, std::unique_ptr<const ResPoly>>& table, unsigned k,
    const ResPoly& base) const {
  {
    std::lock_guard lock(memo_->mu);
    auto it = table.find(k);
    if (it != table.end()) return *it->second;
  }
  // computed outside the lock; a racing fill of the same key is identical
  auto value = std::make_unique<const ResPoly>(pow(base, k));
  std::lock_guard lock(memo_->mu);
  auto [it, inserted] = table.try_emplace(k, std::move(value));
  return *it->second;
}

const ResPoly& HypersurfaceInput::delta_power(unsigned l) const {
  if (l >= p())
    throw Error(ErrorKind::InvalidIndex,
                "Delta power " + std::to_string(l) + " outside 0..p-1");
  return memoized(memo_->delta_pows, l, delta_f_);
}

const ResPoly& HypersurfaceInput::f_power(unsigned k) const {
  if (k > p())
    throw Error(ErrorKind::InvalidIndex,
                "f power " + std::to_string(k) + " outside 0..p");
  return memoized(memo_->f_pows, k, f_res_);
}

}  // namespace pptlab
