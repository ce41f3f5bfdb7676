#include "wittartin/verify.hpp"

#include "wittartin/decomposition.hpp"
#include "wittartin/sampling.hpp"
#include "wittartin/tube.hpp"

namespace wittartin {

CheckReport verify_instance(const ProblemInstance& inst, const VerifyOptions& options) {
  CheckReport out = validate(inst);
  if (!all_passed(out)) return out;

  SplittingChain chain;
  TangentModel model;
  try {
    chain = build_chain(inst);
    out.push_back({"chain.build", true, ""});
    model = build_model(chain, inst);
    out.push_back({"model.build", true, ""});
  } catch (const Error& e) {
    out.push_back({"construction", false, e.what()});
    return out;
  }
  append(out, check_chain(chain, inst));
  append(out, check_model(model));

  const WittDecompositionG dg = assemble_G(model);
  append(out, check_decomposition_G(dg, model));
  const WittDecompositionH dh = assemble_H(model);
  append(out, check_decomposition_H(dh, model));
  const SliceForm sf = slice_form(dh, model);
  append(out, check_slice_form(sf, model));
  append(out, coadjoint_slice_check(chain, inst));

  Sampler rng(options.seed);
  {
    bool equal = slice_momentum(sf, model, Vector::Zero(sf.form.ambient_dim())) ==
                 Vector::Zero(chain.hm.dim());
    for (int i = 0; i < options.samples && equal; ++i) {
      const Vector nu_tilde = rng.rational_vector(sf.form.ambient_dim(), 5, 4);
      equal = slice_momentum(sf, model, nu_tilde) == slice_momentum_direct(sf, model, nu_tilde);
    }
    out.push_back({"slice_momentum formula = (1/2) omega(eta.v, v)", equal, ""});
  }
  {
    bool equivariant = true;
    for (int i = 0; i < options.samples && equivariant; ++i)
      equivariant = slice_momentum_equivariant(inst, rng.rational_vector(inst.slice.dim, 5, 4));
    out.push_back({"Phi_N1 infinitesimally equivariant", equivariant, ""});
  }

  if (options.include_tube) {
    try {
      append(out, check_tube_form(model, 3, options.seed));
      append(out, check_dphi_consistency(model));
      append(out, phi_equivariance_check(model, options.tube_samples, {}, options.seed));
    } catch (const Error& e) {
      out.push_back({"tube", false, e.what()});
    }
  }
  return out;
}

}  // namespace wittartin
