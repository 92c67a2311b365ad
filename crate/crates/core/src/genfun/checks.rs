//! Membership tests for the ring of symmetric series with the cancellation
//! property, and for invariance under the finite Weyl group action.

use crate::coeffring::{assign, Assignment, Series, Var};
use crate::error::{Error, Result};

/// Invariance under every transposition `x_i ↔ x_j` of materialized variables.
pub fn is_x_symmetric(f: &Series) -> bool {
    let n = f.ctx().num_x;
    (1..=n).all(|i| (i + 1..=n).all(|j| swap_vars(f, Var::X(i), Var::X(j)) == *f))
}

/// `f(t, t̄, x_3, …) = f(0, 0, x_3, …)`, realized with `t = x_1`.
/// Vacuous with fewer than two x-variables.
pub fn has_cancellation_property(f: &Series) -> Result<bool> {
    if f.ctx().num_x < 2 {
        return Ok(true);
    }
    let x1 = Series::x(f.ctx(), 1)?;
    let lhs = f.substitute(&assign(Var::X(2), x1.bar()?))?;
    let rhs = f.kill(|v| v == Var::X(1) || v == Var::X(2));
    Ok(lhs == rhs)
}

/// Invariance under `a_i ↔ a_{i+1}` for `i < k`.
pub fn is_a_symmetric(f: &Series, k: u32) -> bool {
    (1..k).all(|i| swap_vars(f, Var::A(i), Var::A(i + 1)) == *f)
}

/// The right action of `s_0`: `f(x; a) ↦ f(a_1, x_1, x_2, …; ā_1, a_2, …)`.
/// The top x-variable of `f` is shifted out of the window, so compare the
/// result against `f` computed with one x-variable fewer.
pub fn s0_action(f: &Series) -> Result<Series> {
    let ctx = f.ctx();
    if ctx.num_a < 1 {
        return Err(Error::ContextTooSmall {
            what: "s0 action",
            need: "numA >= 1".into(),
            have: format!("numA = {}", ctx.num_a),
        });
    }
    let a1 = Series::a(ctx, 1)?;
    let mut asg = Assignment::new();
    for i in 1..=ctx.num_x {
        let img = if i == 1 { a1.clone() } else { Series::x(ctx, i - 1)? };
        asg.insert(Var::X(i), img);
    }
    asg.insert(Var::A(1), a1.bar()?);
    f.substitute(&asg)
}

fn swap_vars(f: &Series, u: Var, v: Var) -> Series {
    f.rename(|w| {
        Some(if w == u {
            v
        } else if w == v {
            u
        } else {
            w
        })
    })
}
