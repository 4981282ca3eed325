//! Bijections built on top of `ξ`, conjugation and rectangle removal.
//!
//! | map      | domain                      | codomain           |
//! |----------|-----------------------------|--------------------|
//! | `phi`    | `F_{1,r}(n)`                | `O_{1,r}(n)`       |
//! | `psi1`   | `F̄_{r,t}(n) ⊔ F_{1,r}(n)`   | `P_{r,t}(n)`       |
//! | `psi2`   | `O*_{r,t}(n)`               | `P_{r,t}(n)`       |
//! | `psi_o`  | `Ō_r(n)`                    | `A_o(n)`           |
//! | `psi_d`  | `D̄_r(n)`                    | `A_d(n)`           |
//! | `psi_t`  | `T_r(n)`                    | `A_t(n)`           |
//! | `zeta`   | `A(n)`                      | `B(n)`             |
//!
//! Domains are checked eagerly. Codomain membership is re-checked only in
//! builds with debug assertions.

use crate::decorated::{DecoratedPartition, Decoration, RectanglePair};
use crate::error::{check_modulus, check_residue, Error, Result};
use crate::families::{pair_in_set, DecoratedFamily, Member, PairSetTag};
use crate::membership::PlainFamily;
use crate::partition::Partition;
use crate::xi::{xi, xi_inverse};

fn debug_check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cfg!(debug_assertions) && !ok {
        return Err(Error::Construction {
            reason: what(),
            trace: None,
        });
    }
    Ok(())
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(what()))
    }
}

fn require_pair(pair: &RectanglePair, tag: PairSetTag, r: u32, t: Option<u32>) -> Result<()> {
    require(pair_in_set(pair, tag, r, t), || {
        format!("{pair} is not in {tag} for r = {r}")
    })
}

fn unit_pair(flat: Partition, count: usize) -> RectanglePair {
    RectanglePair {
        flat,
        rect_part: 1,
        rect_count: count,
    }
}

/// Index of the unique difference `λ_i − λ_{i+1} >= r`.
fn violating_gap(lambda: &Partition, r: u32) -> usize {
    (1..=lambda.len())
        .find(|&i| lambda.gap(i) >= r)
        .expect("caller checked F_{1,r} membership")
}

/// `φ : F_{1,r}(n) → O_{1,r}(n)`. Strips the rectangle `((rk)^i)` sitting on
/// the large difference, applies `ξ`, and adds the `i` parts `rk` back.
pub fn phi_forward(lambda: &Partition, r: u32) -> Result<Partition> {
    check_modulus(r)?;
    require(PlainFamily::OneLargeGap(r).contains(lambda), || {
        format!("{lambda} is not in F_{{1,{r}}}")
    })?;
    let i = violating_gap(lambda, r);
    let k = lambda.gap(i) / r;
    assert!(k > 0, "a difference of at least r gives k >= 1");
    let block = Partition::rectangle(r * k, i);
    let reduced = lambda.subtract(&block)?;
    let out = xi(&reduced, r)?.union(&block);
    debug_check(PlainFamily::OneDivisible(r).contains(&out), || {
        format!("φ({lambda}) = {out} is not in O_{{1,{r}}}")
    })?;
    Ok(out)
}

pub fn phi_inverse(mu: &Partition, r: u32) -> Result<Partition> {
    check_modulus(r)?;
    require(PlainFamily::OneDivisible(r).contains(mu), || {
        format!("{mu} is not in O_{{1,{r}}}")
    })?;
    let value = *mu
        .parts()
        .iter()
        .find(|&&p| p % r == 0)
        .expect("checked membership");
    let copies = mu.multiplicity(value);
    let reduced = xi_inverse(&mu.remove_copies(value, copies)?, r)?;
    let out = reduced.sum(&Partition::rectangle(value, copies));
    debug_check(PlainFamily::OneLargeGap(r).contains(&out), || {
        format!("φ⁻¹({mu}) = {out} is not in F_{{1,{r}}}")
    })?;
    Ok(out)
}

/// `ψ₁`. An overlined member of `F̄_{r,t}` loses `(t^i)`; a member of
/// `F_{1,r}` loses `((ar+t)^i)` where `ν_i − ν_{i+1} − t = ar + d`.
pub fn psi1_forward(nu: &Member, r: u32, t: u32) -> Result<RectanglePair> {
    check_residue(r, t)?;
    let (base, i, s) = match nu {
        Member::Decorated(d) => {
            require(DecoratedFamily::OverlinedFlat { r, t }.contains(d), || {
                format!("{d} is not in F̄_{{{r},{t}}}")
            })?;
            (d.base(), d.position(), t)
        }
        Member::Plain(p) => {
            require(PlainFamily::OneLargeGap(r).contains(p), || {
                format!("{p} is not in F_{{1,{r}}}")
            })?;
            let i = violating_gap(p, r);
            let a = (p.gap(i) - t) / r;
            (p, i, a * r + t)
        }
    };
    let flat = base.subtract(&Partition::rectangle(s, i))?;
    let pair = RectanglePair::new(flat, s, i)?;
    debug_check(pair_in_set(&pair, PairSetTag::P, r, Some(t)), || {
        format!("ψ₁({nu}) = {pair} is not in P_{{{r},{t}}}")
    })?;
    Ok(pair)
}

pub fn psi1_inverse(pair: &RectanglePair, r: u32, t: u32) -> Result<Member> {
    check_residue(r, t)?;
    require_pair(pair, PairSetTag::P, r, Some(t))?;
    let i = pair.rect_count;
    let nu = pair.flat.sum(&pair.rectangle());
    let a = (pair.rect_part - t) / r;
    if a != 0 || nu.gap(i) >= r {
        debug_check(PlainFamily::OneLargeGap(r).contains(&nu), || {
            format!("ψ₁⁻¹({pair}) = {nu} is not in F_{{1,{r}}}")
        })?;
        Ok(Member::Plain(nu))
    } else {
        let d = DecoratedPartition::overlined(nu, i)?;
        debug_check(DecoratedFamily::OverlinedFlat { r, t }.contains(&d), || {
            format!("ψ₁⁻¹({pair}) = {d} is not in F̄_{{{r},{t}}}")
        })?;
        Ok(Member::Decorated(d))
    }
}

/// `ψ₂`. If the mark sits on the `i`-th part equal to `ar+t`, drop those `i`
/// parts and pull the rest back through `ξ`.
pub fn psi2_forward(lambda: &DecoratedPartition, r: u32, t: u32) -> Result<RectanglePair> {
    check_residue(r, t)?;
    require(DecoratedFamily::Marked { r, t }.contains(lambda), || {
        format!("{lambda} is not in O*_{{{r},{t}}}")
    })?;
    let s = lambda.value();
    let i = lambda.occurrence();
    let eta = lambda.base().remove_copies(s, i)?;
    RectanglePair::new(xi_inverse(&eta, r)?, s, i)
}

pub fn psi2_inverse(pair: &RectanglePair, r: u32, t: u32) -> Result<DecoratedPartition> {
    check_residue(r, t)?;
    require_pair(pair, PairSetTag::P, r, Some(t))?;
    let nu = xi(&pair.flat, r)?.union(&pair.rectangle());
    let first = nu
        .first_position(pair.rect_part)
        .expect("rectangle parts present");
    DecoratedPartition::marked(nu, first + pair.rect_count - 1)
}

fn overlined_value(d: &DecoratedPartition) -> Result<u32> {
    require(d.decoration() == Decoration::Overline, || {
        format!("{d} carries no overline")
    })?;
    Ok(d.value())
}

/// `ψ_o : Ō_r(n) → A_o(n)`.
pub fn psi_o(lambda: &DecoratedPartition, r: u32) -> Result<RectanglePair> {
    check_modulus(r)?;
    require(
        DecoratedFamily::OverlinedRegular(r).contains(lambda),
        || format!("{lambda} is not in Ō_{r}"),
    )?;
    let i = overlined_value(lambda)?;
    let nu = lambda.base().remove_copies(i, 1)?;
    Ok(unit_pair(xi_inverse(&nu, r)?, i as usize))
}

pub fn psi_o_inverse(pair: &RectanglePair, r: u32) -> Result<DecoratedPartition> {
    check_modulus(r)?;
    require_pair(pair, PairSetTag::Ao, r, None)?;
    let value = pair.rect_count as u32;
    let base = xi(&pair.flat, r)?.union(&Partition::rectangle(value, 1));
    DecoratedPartition::overline_value(base, value)
}

/// `ψ_d : D̄_r(n) → A_d(n)`.
pub fn psi_d(lambda: &DecoratedPartition, r: u32) -> Result<RectanglePair> {
    check_modulus(r)?;
    require(
        DecoratedFamily::OverlinedBounded(r).contains(lambda),
        || format!("{lambda} is not in D̄_{r}"),
    )?;
    let i = overlined_value(lambda)?;
    let nu = lambda.base().remove_copies(i, 1)?;
    let pair = unit_pair(nu.conjugate(), i as usize);
    debug_check(pair_in_set(&pair, PairSetTag::Ad, r, None), || {
        format!("ψ_d({lambda}) = {pair} is not in A_d")
    })?;
    Ok(pair)
}

pub fn psi_d_inverse(pair: &RectanglePair, r: u32) -> Result<DecoratedPartition> {
    check_modulus(r)?;
    require_pair(pair, PairSetTag::Ad, r, None)?;
    let value = pair.rect_count as u32;
    let base = pair.flat.conjugate().union(&Partition::rectangle(value, 1));
    DecoratedPartition::overline_value(base, value)
}

/// `ψ_t : T_r(n) → A_t(n)`. Removes r copies of the heavily repeated value
/// `j` and conjugates; the rectangle is `(1^{rj})`.
pub fn psi_t(lambda: &Partition, r: u32) -> Result<RectanglePair> {
    check_modulus(r)?;
    require(PlainFamily::ModerateRepeat(r).contains(lambda), || {
        format!("{lambda} is not in T_{r}")
    })?;
    let (j, _) = lambda
        .multiplicities()
        .into_iter()
        .find(|&(_, m)| m > r as usize)
        .expect("checked membership");
    let nu = lambda.remove_copies(j, r as usize)?;
    let pair = unit_pair(nu.conjugate(), (r * j) as usize);
    debug_check(pair_in_set(&pair, PairSetTag::At, r, None), || {
        format!("ψ_t({lambda}) = {pair} is not in A_t")
    })?;
    Ok(pair)
}

pub fn psi_t_inverse(pair: &RectanglePair, r: u32) -> Result<Partition> {
    check_modulus(r)?;
    require_pair(pair, PairSetTag::At, r, None)?;
    let j = (pair.rect_count / r as usize) as u32;
    Ok(pair
        .flat
        .conjugate()
        .union(&Partition::rectangle(j, r as usize)))
}

/// `ζ : A(n) → B(n)`, `(μ, (1^j)) ↦ (μ − ((r−1)^j), (1^{rj}))`.
pub fn zeta(pair: &RectanglePair, r: u32) -> Result<RectanglePair> {
    check_modulus(r)?;
    require_pair(pair, PairSetTag::A, r, None)?;
    let j = pair.rect_count;
    let nu = pair.flat.subtract(&Partition::rectangle(r - 1, j))?;
    let out = unit_pair(nu, r as usize * j);
    debug_check(pair_in_set(&out, PairSetTag::B, r, None), || {
        format!("ζ({pair}) = {out} is not in B")
    })?;
    Ok(out)
}

pub fn zeta_inverse(pair: &RectanglePair, r: u32) -> Result<RectanglePair> {
    check_modulus(r)?;
    require_pair(pair, PairSetTag::B, r, None)?;
    let j = pair.rect_count / r as usize;
    let mu = pair.flat.sum(&Partition::rectangle(r - 1, j));
    let out = unit_pair(mu, j);
    debug_check(pair_in_set(&out, PairSetTag::A, r, None), || {
        format!("ζ⁻¹({pair}) = {out} is not in A")
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn pair(flat: &str, s: u32, i: usize) -> RectanglePair {
        RectanglePair::new(p(flat), s, i).unwrap()
    }

    #[test]
    fn phi_worked_example() {
        let lambda = p("27,24,20,15,13,10,6,5,2");
        let mu = phi_forward(&lambda, 5).unwrap();
        assert_eq!(mu, p("32,24,23,16,12,5,5,5"));
        assert_eq!(phi_inverse(&mu, 5).unwrap(), lambda);
    }

    #[test]
    fn phi_smallest_case() {
        assert_eq!(phi_forward(&p("3"), 3).unwrap(), p("3"));
        assert!(phi_forward(&p("2,1"), 3).is_err());
    }

    #[test]
    fn psi1_examples() {
        let case1 = Member::Decorated(DecoratedPartition::overlined(p("4,3,1"), 2).unwrap());
        let image = psi1_forward(&case1, 3, 2).unwrap();
        assert_eq!(image, pair("2,1,1", 2, 2));
        assert_eq!(psi1_inverse(&image, 3, 2).unwrap(), case1);

        let case2 = Member::Plain(p("5,2,1"));
        let image = psi1_forward(&case2, 3, 2).unwrap();
        assert_eq!(image, pair("3,2,1", 2, 1));
        assert_eq!(psi1_inverse(&image, 3, 2).unwrap(), case2);
    }

    #[test]
    fn psi2_examples() {
        let lambda = DecoratedPartition::marked(p("32,24,23,16,12,7,7"), 7).unwrap();
        let image = psi2_forward(&lambda, 5, 2).unwrap();
        assert_eq!(image, pair("22,19,15,15,13,10,6,5,2", 7, 2));
        assert_eq!(psi2_inverse(&image, 5, 2).unwrap(), lambda);

        let single = DecoratedPartition::marked(p("2"), 1).unwrap();
        assert_eq!(psi2_forward(&single, 3, 2).unwrap(), pair("", 2, 1));
        let wrong = DecoratedPartition::marked(p("32,24,23,16,12,7,7"), 2).unwrap();
        assert!(psi2_forward(&wrong, 5, 2).is_err());
    }

    #[test]
    fn second_identity_examples() {
        let o = DecoratedPartition::overlined(p("32,24,23,16,16,12"), 5).unwrap();
        let image = psi_o(&o, 5).unwrap();
        assert_eq!(image, pair("22,19,15,15,13,10,6,5,2", 1, 16));
        assert_eq!(psi_o_inverse(&image, 5).unwrap(), o);

        let d = DecoratedPartition::overlined(p("20,20,20,17,13,10,10,10,3"), 3).unwrap();
        let image = psi_d(&d, 5).unwrap();
        assert_eq!(image, pair("8^3,7^7,4^3,3^4,2^3", 1, 20));
        assert_eq!(psi_d_inverse(&image, 5).unwrap(), d);

        let t = p("20,17,13,10^7,3");
        let image = psi_t(&t, 5).unwrap();
        assert_eq!(image, pair("6^3,5^7,3^3,2^4,1^3", 1, 50));
        assert_eq!(psi_t_inverse(&image, 5).unwrap(), t);
    }

    #[test]
    fn second_identity_small_cases() {
        let one = DecoratedPartition::overlined(p("1"), 1).unwrap();
        for r in [2, 3, 5] {
            assert_eq!(psi_o(&one, r).unwrap(), pair("", 1, 1));
            assert_eq!(psi_d(&one, r).unwrap(), pair("", 1, 1));
        }
        for r in 2..6 {
            let ones = Partition::rectangle(1, r as usize + 1);
            assert_eq!(psi_t(&ones, r).unwrap(), pair("1", 1, r as usize));
        }
    }

    #[test]
    fn zeta_examples() {
        let image = zeta(&pair("2", 1, 1), 3).unwrap();
        assert_eq!(image, pair("", 1, 3));
        assert_eq!(zeta_inverse(&image, 3).unwrap(), pair("2", 1, 1));
        assert_eq!(zeta(&pair("2,1", 1, 1), 2).unwrap(), pair("1,1", 1, 2));
        assert!(zeta(&pair("1", 1, 1), 3).is_err());
    }
}
