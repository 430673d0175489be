#include "ramacf/report.hpp"

#include "ramacf/bigreal.hpp"

namespace ramacf {

Report compare_report(std::string name, std::string category, const BigReal& lhs,
                      const BigReal& rhs, const BigReal& tol, long precision_bits,
                      std::string notes) {
  Report rep;
  rep.case_name = std::move(name);
  rep.category = std::move(category);
  rep.lhs = lhs.decimal(50);
  rep.rhs = rhs.decimal(50);
  BigReal err = abs(lhs - rhs);
  rep.abs_error = err.decimal(12);
  BigReal scale = abs(lhs) > abs(rhs) ? abs(lhs) : abs(rhs);
  rep.rel_error = scale.is_zero() ? "0" : (err / scale).decimal(12);
  rep.precision_bits = precision_bits;
  rep.status = err < tol ? "pass" : "fail";
  rep.notes = std::move(notes);
  return rep;
}

}  // namespace ramacf
