//! Individual property checks. Each returns whether it held and a short
//! description of what was compared.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::equivariant::{
    beta_on, bockstein_from, edge_from, equivariant_degree, fundamental_class, group_cohomology, les_coeff, les_edge,
    ordinary, pushforward_chain_map, s_from, FixedSet, Localizer, TotalComplex, Variance,
};
use crate::error::Result;
use crate::gcomplex::{CoeffSystem, GChainComplex, GComplex, GMap};
use crate::linalg::{induced_hom, FGAbelianGroup, GroupHom, IntMatrix, Ring};
use crate::spectral::{
    e2_page, gm_report, poincare_check, rho_surjectivity_criteria, surjectivity_witness, witness_contract_holds,
    CriterionVariant,
};

pub type Outcome = Result<(bool, String)>;

fn reduce_if(coeff: CoeffSystem, m: IntMatrix) -> IntMatrix {
    if coeff.is_mod2() {
        m.map(|v| Ring::Mod2.reduce(v))
    } else {
        m
    }
}

/// `H_p(pt; G, A(k)) = H^{-p}(G, A(k))` for `-6 ≤ p ≤ 0`.
pub fn point_axiom(coeff: CoeffSystem) -> Outcome {
    let pt = crate::gcomplex::builtin("point")?;
    let t = TotalComplex::homological(&pt, coeff)?;
    let sign = if coeff == CoeffSystem::Z1 { -1 } else { 1 };
    let module = if coeff.is_mod2() {
        FGAbelianGroup::elementary(1)
    } else {
        FGAbelianGroup::free(1)
    };
    let sigma = GroupHom::new(module.clone(), module, IntMatrix::from_i64(&[&[sign]]))?;
    let mut seen = Vec::new();
    for p in -6..=0isize {
        let lhs = t.homology(p)?.group().clone();
        let rhs = group_cohomology(&sigma, (-p) as usize)?;
        if lhs != rhs {
            return Ok((false, format!("p={p}: {lhs} vs {rhs}")));
        }
        seen.push(lhs.to_string());
    }
    Ok((true, seen.join(", ")))
}

/// `∂∂ = 0` and `σ∂ = ∂σ` on the chains.
pub fn chain_identities(x: &GComplex, coeff: CoeffSystem) -> Outcome {
    let c = GChainComplex::new(x, coeff)?;
    for q in 0..=x.dim() + 1 {
        if !reduce_if(coeff, c.boundary(q - 1).mul(&c.boundary(q))).is_zero() {
            return Ok((false, format!("boundary squares to nonzero at {q}")));
        }
        let comm = c.sigma(q - 1).mul(&c.boundary(q)).sub(&c.boundary(q).mul(&c.sigma(q)));
        if !reduce_if(coeff, comm).is_zero() {
            return Ok((false, format!("sigma fails to commute at {q}")));
        }
        let sq = c.sigma(q).mul(&c.sigma(q));
        if sq != IntMatrix::identity(c.rank(q)) {
            return Ok((false, format!("sigma is not an involution at {q}")));
        }
    }
    Ok((true, format!("degrees 0..={}", x.dim())))
}

/// `D² = 0` for both variances over a window of degrees.
pub fn total_squares_to_zero(x: &GComplex, coeff: CoeffSystem) -> Outcome {
    let chains = GChainComplex::new(x, coeff)?;
    for variance in [Variance::Homology, Variance::Cohomology] {
        let t = TotalComplex::from_chains(chains.clone(), variance);
        for p in -4..=x.dim() + 2 {
            if !reduce_if(coeff, t.differential(t.next(p)).mul(&t.differential(p))).is_zero() {
                return Ok((false, format!("{variance:?} p={p}")));
            }
        }
    }
    Ok((true, "both variances".into()))
}

/// Fixed sets of `X` and `sd X` have the same `ℤ/2` homology.
pub fn subdivision_keeps_fixed_set(x: &GComplex) -> Outcome {
    let a = FixedSet::new(x)?.dims();
    let b = FixedSet::new(&x.barycentric_subdivide())?.dims();
    Ok((a == b, format!("{a:?} vs {b:?}")))
}

/// `ρ_{n,even}` (resp. odd) is an isomorphism for `n < 0` with `n + k` even
/// (resp. odd); with `ℤ/2` coefficients the whole of `ρ_n` is.
pub fn localization_isomorphism(x: &GComplex, coeff: CoeffSystem, n: isize) -> Outcome {
    let loc = Localizer::new(x)?;
    let r = loc.rho(coeff, n)?;
    let (part, map) = if coeff.is_mod2() {
        ("total", r.total()?)
    } else if (n + coeff.twist() as isize).rem_euclid(2) == 0 {
        ("even", r.even()?)
    } else {
        ("odd", r.odd()?)
    };
    Ok((
        map.is_isomorphism(),
        format!("{part}: {} -> {}", map.source, map.target),
    ))
}

/// `ρ ∘ s = ρ` from degree `n`.
pub fn rho_after_s(x: &GComplex, coeff: CoeffSystem, n: isize) -> Outcome {
    let loc = Localizer::new(x)?;
    let src = TotalComplex::homological(x, coeff)?;
    let tgt = TotalComplex::homological(x, coeff.shift(1))?;
    let h = src.homology(n)?;
    let h_next = tgt.homology(n - 1)?;
    let s = s_from(&src, &tgt, n, &h, &h_next)?;
    let direct = loc.rho_on(coeff, n, h)?.total()?;
    let shifted = loc.rho_on(coeff.shift(1), n - 1, h_next)?.total()?.compose(&s)?;
    Ok((direct.same_map(&shifted), format!("n={n}")))
}

/// `ρ_n(δγ)` against `ρ_{n+1}(γ)` and the Bockstein of `X^G`, on every
/// generator `γ` of `H_{n+1}(X;G,ℤ/2)`.
pub fn rho_and_bockstein(x: &GComplex, coeff: CoeffSystem, n: isize) -> Outcome {
    let loc = Localizer::new(x)?;
    let fixed = loc.fixed();
    let t2 = TotalComplex::homological(x, CoeffSystem::Z2)?;
    let tz = TotalComplex::homological(x, coeff)?;
    let h2 = t2.homology(n + 1)?;
    let below = tz.homology(n)?;
    let delta = bockstein_from(&tz, n + 1, &h2, &below)?;
    let rho2 = loc.rho_on(CoeffSystem::Z2, n + 1, h2)?;
    let rhoz = loc.rho_on(coeff, n, below)?;
    let even = (n + coeff.twist() as isize).rem_euclid(2) == 0;
    let m = delta.source.ngens();
    for j in 0..m {
        let mut e = vec![BigInt::zero(); m];
        e[j] = BigInt::from(1);
        let lhs = rhoz.apply(&delta.apply(&e));
        let v = rho2.apply(&e);
        let (lhs, rhs) = if even {
            let rhs = v.even_part().add(&fixed.bockstein_vector(&v.odd_part())?);
            (lhs.even_part(), rhs.even_part())
        } else {
            let rhs = v.odd_part().add(&fixed.bockstein_vector(&v.even_part())?);
            (lhs.odd_part(), rhs.odd_part())
        };
        if lhs != rhs {
            return Ok((
                false,
                format!("generator {j}: {:?} vs {:?}", lhs.components, rhs.components),
            ));
        }
    }
    Ok((true, format!("n={n}, {m} generators")))
}

/// `deg_G` agrees with the push-forward to a point, and mod 2 with
/// `deg ∘ ρ`.
pub fn degree_compatibilities(x: &GComplex, coeff: CoeffSystem) -> Outcome {
    let t = TotalComplex::homological(x, coeff)?;
    let h = t.homology(0)?;
    let to_pt = GMap::to_point(x)?;
    let pt = TotalComplex::homological(to_pt.target(), coeff)?;
    let h_pt = pt.homology(0)?;
    if h_pt.group().ngens() != 1 {
        return Ok((false, format!("H_0 of a point is {}", h_pt.group())));
    }
    let unit = equivariant_degree(&pt, &h_pt.generator(0))?;
    let push = induced_hom(&pushforward_chain_map(&to_pt, &t, &pt, 0), &h, &h_pt)?;
    let loc = Localizer::new(x)?;
    let rho = loc.rho_on(coeff, 0, h.clone())?;
    let g = h.generators();
    for j in 0..g.cols() {
        let deg = equivariant_degree(&t, &g.column(j))?;
        let pushed = t.ring().reduce(&(push.matrix.get(0, j) * &unit));
        if deg != pushed {
            return Ok((false, format!("generator {j}: deg_G {deg}, push-forward {pushed}")));
        }
        let mut e = vec![BigInt::zero(); g.cols()];
        e[j] = BigInt::from(1);
        let via_rho = loc.fixed().degree(&rho.apply(&e));
        if Ring::Mod2.reduce(&deg) != BigInt::from(via_rho) {
            return Ok((false, format!("generator {j}: deg_G {deg}, deg rho {via_rho}")));
        }
    }
    Ok((true, format!("{} generators", g.cols())))
}

/// `e ∘ f_* = f_* ∘ e` and `ρ ∘ f_* = f^G_* ∘ ρ`.
pub fn naturality(f: &GMap, coeff: CoeffSystem) -> Outcome {
    let src = TotalComplex::homological(f.source(), coeff)?;
    let tgt = TotalComplex::homological(f.target(), coeff)?;
    let loc_x = Localizer::new(f.source())?;
    let loc_y = Localizer::new(f.target())?;
    let fg = f.on_fixed_sets()?;
    for p in -2..=f.source().dim() {
        let hx = src.homology(p)?;
        let hy = tgt.homology(p)?;
        let f_eq = induced_hom(&pushforward_chain_map(f, &src, &tgt, p), &hx, &hy)?;
        if p >= 0 {
            let ox = ordinary(&src, p)?;
            let oy = ordinary(&tgt, p)?;
            let f_ord = induced_hom(&reduce_if(coeff, f.chain_map(p, coeff)), &ox, &oy)?;
            let ex = edge_from(&src, p, &hx, &ox)?.hom;
            let ey = edge_from(&tgt, p, &hy, &oy)?.hom;
            if !ey.compose(&f_eq)?.same_map(&f_ord.compose(&ex)?) {
                return Ok((false, format!("edge square fails at p={p}")));
            }
        }
        let rx = loc_x.rho_on(coeff, p, hx)?;
        let ry = loc_y.rho_on(coeff, p, hy)?;
        let (fx, fy) = (loc_x.fixed(), loc_y.fixed());
        for q in 0..fx.homology.len().min(fy.homology.len()) {
            let lhs = ry.components[q].compose(&f_eq)?;
            let f_q = induced_hom(
                &fg.chain_map(q as isize, CoeffSystem::Z2),
                &fx.homology[q],
                &fy.homology[q],
            )?;
            let rhs = f_q.compose(&rx.components[q])?;
            if !lhs.same_map(&rhs) {
                return Ok((false, format!("localization square fails at p={p}, q={q}")));
            }
        }
    }
    Ok((true, "edge and localization squares commute".into()))
}

/// `β(f^*ω) = f^*β(ω)` in degree `n`.
pub fn beta_naturality(f: &GMap, coeff: CoeffSystem, n: isize) -> Outcome {
    let src = TotalComplex::cohomological(f.source(), coeff)?;
    let tgt = TotalComplex::cohomological(f.target(), coeff)?;
    let fx = FixedSet::new(f.source())?;
    let fy = FixedSet::new(f.target())?;
    let hx = src.homology(n)?;
    let hy = tgt.homology(n)?;
    let pull = pull_back_chain_map(f, &src, &tgt, n);
    let f_star = induced_hom(&pull, &hy, &hx)?;
    let bx = beta_on(&src, &fx, n, hx)?;
    let by = beta_on(&tgt, &fy, n, hy)?;
    let fg = f.on_fixed_sets()?;
    for q in 0..fx.cohomology.len().min(fy.cohomology.len()) {
        let by_q = &by.components[q];
        let restrict = fg.chain_map(q as isize, CoeffSystem::Z2).transpose();
        let fg_star = induced_hom(&restrict, &fy.cohomology[q], &fx.cohomology[q])?;
        let lhs = bx.components[q].compose(&f_star)?;
        let rhs = fg_star.compose(by_q)?;
        if !lhs.same_map(&rhs) {
            return Ok((false, format!("fails in degree {q}")));
        }
    }
    Ok((true, format!("n={n}")))
}

/// `f^#` on cochains of total degree `n`: blockwise transpose of `f_#`.
fn pull_back_chain_map(f: &GMap, src: &TotalComplex, tgt: &TotalComplex, n: isize) -> IntMatrix {
    let coeff = src.coeff();
    let mut m = IntMatrix::zeros(src.rank(n), tgt.rank(n));
    for s in src.blocks(n) {
        if let Some(t) = tgt.block(n, s.column) {
            let piece = reduce_if(coeff, f.chain_map(s.degree as isize, coeff).transpose());
            for i in 0..piece.rows() {
                for j in 0..piece.cols() {
                    m.set(s.offset + i, t.offset + j, piece.get(i, j).clone());
                }
            }
        }
    }
    m
}

/// `e_d` is an isomorphism onto the invariants and `e_d(μ)` generates them.
pub fn fundamental_edge(x: &GComplex, base: CoeffSystem) -> Outcome {
    let d = x.dim().max(0) as usize;
    let mu = fundamental_class(x, base, d)?;
    Ok((
        mu.edge_is_iso_onto_invariants() && mu.edge_image_generates(),
        format!("mu in H_{d}(X;G,{})", mu.coeff),
    ))
}

pub fn edge_sequence(x: &GComplex, coeff: CoeffSystem) -> Outcome {
    let seq = les_edge(x, coeff, -4..=x.dim() + 1)?;
    let bad: Vec<&str> = seq
        .checks
        .iter()
        .filter(|c| !(c.exact && c.composite_zero))
        .map(|c| c.node.as_str())
        .collect();
    Ok((
        bad.is_empty(),
        format!("{} nodes checked; failing: {bad:?}", seq.checks.len()),
    ))
}

pub fn coefficient_sequence(x: &GComplex, coeff: CoeffSystem) -> Outcome {
    let seq = les_coeff(x, coeff, -4..=x.dim() + 1)?;
    let bad: Vec<&str> = seq
        .checks
        .iter()
        .filter(|c| !(c.exact && c.composite_zero))
        .map(|c| c.node.as_str())
        .collect();
    Ok((
        bad.is_empty(),
        format!("{} nodes checked; failing: {bad:?}", seq.checks.len()),
    ))
}

pub fn gm_inequalities(x: &GComplex) -> Outcome {
    let r = gm_report(x)?;
    Ok((
        r.inequalities_hold(),
        format!(
            "GM1 {}<={}, GM2 {}<={}, GM3 {}<={}",
            r.gm1.lhs, r.gm1.rhs, r.gm2.lhs, r.gm2.rhs, r.gm3.lhs, r.gm3.rhs
        ),
    ))
}

pub fn gm_consistency(x: &GComplex) -> Outcome {
    let r = gm_report(x)?;
    Ok((
        r.gm_consistent() && r.zgm_consistent(),
        format!("is_gm={} is_zgm={}", r.is_gm, r.is_zgm),
    ))
}

pub fn gm_expected(x: &GComplex, expected: bool) -> Outcome {
    let r = gm_report(x)?;
    Ok((
        r.is_gm == expected && r.gm1.is_equality() == expected,
        format!("is_gm={} GM1 {}={}", r.is_gm, r.gm1.lhs, r.gm1.rhs),
    ))
}

pub fn e2_periodicity(x: &GComplex, coeff: CoeffSystem) -> Outcome {
    let page = e2_page(x, coeff, None)?;
    Ok((page.is_periodic(), format!("depth {}", page.depth)))
}

pub fn criteria_agree(x: &GComplex, variant: CriterionVariant) -> Outcome {
    let r = rho_surjectivity_criteria(x, variant)?;
    Ok((
        r.agree(),
        format!("composite zero {}, rho onto {}", r.criterion_zero, r.rho_surjective),
    ))
}

pub fn witness_contract(x: &GComplex) -> Outcome {
    let outcome = surjectivity_witness(x, CoeffSystem::Z2)?;
    Ok((witness_contract_holds(x, &outcome), format!("{outcome:?}")))
}

pub fn duality(x: &GComplex, base: CoeffSystem) -> Outcome {
    let d = x.dim().max(0) as usize;
    let r = poincare_check(x, base, d)?;
    let bad: Vec<String> = r
        .rows
        .iter()
        .filter(|row| !row.matches())
        .map(|row| format!("i={} l={}", row.i, row.l))
        .collect();
    Ok((bad.is_empty(), format!("mu over {}; mismatches: {bad:?}", r.coeff)))
}
