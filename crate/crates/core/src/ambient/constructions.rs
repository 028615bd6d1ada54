use std::sync::Arc;

use crate::diagram::{Pseudofunctor, Variance};
use crate::error::{Error, Result};
use crate::fincat::{ArrowId, ObjectId};
use crate::fractions::{check_axioms, FractionsInput};

use super::finset::{
    coequalize_reflexive, coproduct, factor_through_cover, is_cover, pullback, Coequalizer, Coproduct, FinMap, FinSet,
    Pullback,
};
use super::internal::{internalize, InternalCategory};

/// The internal category of elements together with the coproduct blocks it
/// was assembled from.
#[derive(Debug, Clone)]
pub struct InternalElements {
    pub category: InternalCategory,
    /// `∐_A D(A)_0`.
    pub objects: Coproduct,
    /// `∐_φ D_φ`.
    pub arrows: Coproduct,
    /// `D_φ = D(A)_1 ×_{D(A)_0} D(B)_0`, pairs `(f, b)` with `t(f) = D(φ)(b)`.
    pub cofibers: Vec<Pullback>,
    fibers: Vec<InternalCategory>,
}

fn inverse(cat: &crate::fincat::FinCategory, f: ArrowId, what: &str) -> Result<ArrowId> {
    cat.inverse(f)
        .ok_or_else(|| Error::Precondition(format!("{what} component {} is not invertible", cat.arrow_name(f))))
}

/// Assembles the category of elements of a contravariant pseudofunctor
/// from coproducts of cofiber pullbacks.
pub fn internal_elements(d: &Arc<Pseudofunctor>) -> Result<InternalElements> {
    if d.variance() != Variance::Contravariant {
        return Err(Error::domain("internal elements are built for contravariant diagrams"));
    }
    let report = d.validate();
    if !report.is_valid() {
        return Err(Error::Precondition(format!(
            "diagram is not a pseudofunctor:\n{report}"
        )));
    }
    let idx = d.index();
    let fibers: Vec<InternalCategory> = idx.objects().map(|a| internalize(d.category(a))).collect();
    let objects = coproduct(
        &idx.objects()
            .map(|a| FinSet::new(format!("D({})0", idx.object_name(a)), fibers[a.0].c0.size))
            .collect::<Vec<_>>(),
    );

    let mut cofibers = Vec::with_capacity(idx.arrow_count());
    for phi in idx.arrows() {
        let (a, b) = (idx.src(phi), idx.tgt(phi));
        let dphi = d.functor(phi);
        let dphi0 = FinMap::new(
            fibers[b.0].c0.clone(),
            fibers[a.0].c0.clone(),
            dphi.object_map().iter().map(|x| x.0).collect(),
        )?;
        let mut pb = pullback(&fibers[a.0].t, &dphi0)?;
        pb.object.label = format!("D_{}", idx.arrow_name(phi));
        cofibers.push(pb);
    }
    let arrows = coproduct(&cofibers.iter().map(|p| p.object.clone()).collect::<Vec<_>>());

    let mut s_parts = Vec::new();
    let mut t_parts = Vec::new();
    for phi in idx.arrows() {
        let (a, b) = (idx.src(phi), idx.tgt(phi));
        let pb = &cofibers[phi.0];
        s_parts.push(pb.p0.then(&fibers[a.0].s)?.then(&objects.injections[a.0])?);
        t_parts.push(pb.p1.then(&objects.injections[b.0])?);
    }
    let s = arrows.copair(&s_parts)?;
    let t = arrows.copair(&t_parts)?;

    let mut e_parts = Vec::new();
    for a in idx.objects() {
        let cat = d.category(a);
        let unit = d.unitor(a);
        let delta_inv = cat
            .objects()
            .map(|x| inverse(cat, unit.component(x), "unitor").map(|f| f.0))
            .collect::<Result<Vec<_>>>()?;
        let delta_inv = FinMap::new(fibers[a.0].c0.clone(), fibers[a.0].c1.clone(), delta_inv)?;
        let one = idx.identity(a);
        let into = cofibers[one.0].mediate(&delta_inv, &FinMap::identity(&fibers[a.0].c0))?;
        e_parts.push(into.then(&arrows.injections[one.0])?);
    }
    let e = objects.copair(&e_parts)?;

    let d2 = pullback(&t, &s)?;
    let mut table = Vec::with_capacity(d2.object.size);
    for k in 0..d2.object.size {
        let (i, j) = d2.pair(k);
        let (phi, li) = arrows.locate(i);
        let (psi, lj) = arrows.locate(j);
        let (phi, psi) = (ArrowId(phi), ArrowId(psi));
        let (f, _) = cofibers[phi.0].pair(li);
        let (g, c) = cofibers[psi.0].pair(lj);
        let ca = d.category(idx.src(phi));
        let chi = idx
            .composite(phi, psi)
            .ok_or_else(|| Error::integrity("cofiber pair over non-composable index arrows"))?;
        let comp = inverse(ca, d.compositor(phi, psi).component(ObjectId(c)), "compositor")?;
        let h = ca.compose_path(&[ArrowId(f), d.functor(phi).arrow(ArrowId(g)), comp]);
        let local = cofibers[chi.0]
            .index_of(h.0, c)
            .ok_or_else(|| Error::integrity("composite leaves its cofiber"))?;
        table.push(arrows.injections[chi.0].apply(local));
    }
    let c = FinMap::new(d2.object.clone(), arrows.object.clone(), table)?;

    let object_names = idx
        .objects()
        .flat_map(|a| {
            let cat = d.category(a);
            cat.objects()
                .map(move |x| format!("({},{})", idx.object_name(a), cat.object_name(x)))
        })
        .collect();
    let arrow_names = (0..arrows.object.size)
        .map(|i| {
            let (phi, l) = arrows.locate(i);
            let (f, b) = cofibers[phi].pair(l);
            let (a, bb) = (idx.src(ArrowId(phi)), idx.tgt(ArrowId(phi)));
            format!(
                "({},{},{})",
                idx.arrow_name(ArrowId(phi)),
                d.category(a).arrow_name(ArrowId(f)),
                d.category(bb).object_name(ObjectId(b))
            )
        })
        .collect();
    let category = InternalCategory::new((s, t, e, c), object_names, arrow_names)?;
    Ok(InternalElements {
        category,
        objects,
        arrows,
        cofibers,
        fibers,
    })
}

impl InternalElements {
    /// The cleavage `w: ∐_φ D(cod φ)_0 → 𝔻1`, `b ↦ (φ, 1_{D(φ)(b)}, b)`.
    pub fn cleavage(&self, d: &Pseudofunctor) -> Result<FinMap> {
        let idx = d.index();
        let mut parts = Vec::new();
        let mut blocks = Vec::new();
        for phi in idx.arrows() {
            let (a, b) = (idx.src(phi), idx.tgt(phi));
            let (fa, fb) = (&self.fibers[a.0], &self.fibers[b.0]);
            let dphi0 = FinMap::new(
                fb.c0.clone(),
                fa.c0.clone(),
                d.functor(phi).object_map().iter().map(|x| x.0).collect(),
            )?;
            let leg = dphi0.then(&fa.e)?;
            let into = self.cofibers[phi.0].mediate(&leg, &FinMap::identity(&fb.c0))?;
            parts.push(into.then(&self.arrows.injections[phi.0])?);
            blocks.push(FinSet::new(format!("W_{}", idx.arrow_name(phi)), fb.c0.size));
        }
        let w = coproduct(&blocks).copair(&parts)?;
        if !w.is_injective() {
            return Err(Error::integrity("cleavage map is not injective"));
        }
        Ok(w)
    }
}

/// `internal_elements(d)` followed by its cleavage.
pub fn internal_cleavage(d: &Pseudofunctor, ie: &InternalElements) -> Result<FinMap> {
    ie.cleavage(d)
}

/// The category of fractions built from pullbacks, a reflexive coequalizer
/// and factorizations through covers.
#[derive(Debug, Clone)]
pub struct InternalLocalization {
    pub category: InternalCategory,
    /// The object of spans `(v, g)` with `v ∈ W`.
    pub spans: Pullback,
    /// The object of sailboats.
    pub sailboats: Pullback,
    pub quotient: Coequalizer,
    /// Sizes of the coequalizer of `p0², p1²` and of the composable-pairs
    /// pullback; they are in explicit bijection.
    pub composable_pairs: (usize, usize),
}

fn mediate_compose(ic: &InternalCategory, a: &FinMap, b: &FinMap) -> Result<FinMap> {
    ic.c2().mediate(a, b)?.then(&ic.c)
}

/// First preimage of each element; `Integrity` if `f` is not a cover.
fn split(f: &FinMap, what: &str) -> Result<Vec<usize>> {
    if !is_cover(f) {
        return Err(Error::integrity(format!("{what} is not a cover")));
    }
    let mut lift = vec![usize::MAX; f.cod().size];
    for (x, &y) in f.table().iter().enumerate().rev() {
        lift[y] = x;
    }
    Ok(lift)
}

/// Localizes an internal category at the arrows picked out by an injective
/// `w: W → C1`. Fillers are chosen by a global first-choice function, so
/// the cover over composable spans is the identity.
pub fn internal_localize(ic: &InternalCategory, w: &FinMap) -> Result<InternalLocalization> {
    let report = ic.validate();
    if !report.is_valid() {
        return Err(Error::Precondition(format!("not an internal category:\n{report}")));
    }
    if w.cod().size != ic.c1.size || !w.is_injective() {
        return Err(Error::domain("W must be an injective map into C1"));
    }
    let ext = Arc::new(ic.externalize()?);
    let inp = FractionsInput::new(ext, w.table().iter().map(|&f| ArrowId(f)))?;
    let axioms = check_axioms(&inp);
    if !axioms.all_pass() {
        return Err(Error::Axioms(Box::new(axioms)));
    }
    let (s, t) = (&ic.s, &ic.t);
    let ws = w.then(s)?;
    let wt = w.then(t)?;

    // spans (i, g) with s(w i) = s(g)
    let spn = pullback(&ws, s)?;
    let s_span = spn.p0.then(&wt)?;
    let t_span = spn.p1.then(t)?;

    // W△: (h, i, k) with h ; w(i) = w(k)
    let hw = pullback(t, &ws)?;
    let hw_c = mediate_compose(ic, &hw.p0, &hw.p1.then(w)?)?;
    let tri = pullback(&hw_c, w)?;
    let tri_h = tri.p0.then(&hw.p0)?;
    let tri_i = tri.p0.then(&hw.p1)?;
    // sailboats: a triangle and g with s(g) = s(w i)
    let sb = pullback(&tri_i.then(&ws)?, s)?;
    let sb_tri = &sb.p0;
    let p0 = spn.mediate(&sb_tri.then(&tri_i)?, &sb.p1)?;
    let hg = mediate_compose(ic, &sb_tri.then(&tri_h)?, &sb.p1)?;
    let p1 = spn.mediate(&sb_tri.then(&tri.p1)?, &hg)?;

    // the trivial sailboat (e(s w i), i, i, g) is a common section
    let e_sw = spn.p0.then(&ws)?.then(&ic.e)?;
    let to_hw = hw.mediate(&e_sw, &spn.p0)?;
    let to_tri = tri.mediate(&to_hw, &spn.p0)?;
    let section = sb.mediate(&to_tri, &spn.p1)?;
    let id_spn = FinMap::identity(&spn.object);
    if !section.then(&p0)?.agrees_with(&id_spn) || !section.then(&p1)?.agrees_with(&id_spn) {
        return Err(Error::integrity("trivial sailboats are not a common section"));
    }
    let quotient = coequalize_reflexive(&p0, &p1)?;
    let l1 = FinSet::new("L1", quotient.object.size);
    let s_l = quotient.factor(&s_span)?;
    let t_l = quotient.factor(&t_span)?;

    // identities through the first section of wt
    let alpha = split(&wt, "target map restricted to W")?;
    let sigma = FinMap::new(
        ic.c0.clone(),
        spn.object.clone(),
        alpha
            .iter()
            .map(|&i| spn.index_of(i, w.apply(i)).expect("(α x, α x) is a span"))
            .collect(),
    )?;
    let e_l = sigma.then(&quotient.quotient)?;

    // Ore squares w'h = g v as a pullback of the two composites
    let csp = pullback(t, &wt)?;
    let x1 = pullback(&wt, s)?;
    let x1_c = mediate_compose(ic, &x1.p0.then(w)?, &x1.p1)?;
    let y1 = pullback(t, &ws)?;
    let y1_c = mediate_compose(ic, &y1.p0, &y1.p1.then(w)?)?;
    let square = pullback(&x1_c, &y1_c)?;
    let to_csp = csp.mediate(&square.p0.then(&x1.p1)?, &square.p1.then(&y1.p1)?)?;
    let ore = split(&to_csp, "projection from Ore squares to cospans")?;

    // W∘: (m, i', i, k) with m ; w i' ; w i = w k
    let wc = pullback(&wt, &ws)?;
    let path = mediate_compose(ic, &wc.p0.then(w)?, &wc.p1.then(w)?)?;
    let mw = pullback(t, &wc.p0.then(&ws)?)?;
    let mw_c = mediate_compose(ic, &mw.p0, &mw.p1.then(&path)?)?;
    let wcirc = pullback(&mw_c, w)?;
    let weak = split(&wcirc.p0.then(&mw.p1)?, "projection from W-paths to W-composable pairs")?;

    // composition on representatives
    let s2 = pullback(&t_span, &s_span)?;
    let mut rep = Vec::with_capacity(s2.object.size);
    for k in 0..s2.object.size {
        let (a, b) = s2.pair(k);
        let ((i1, g1), (i2, g2)) = (spn.pair(a), spn.pair(b));
        let cospan = csp.index_of(g1, i2).expect("spans compose");
        let (xi, yi) = square.pair(ore[cospan]);
        let (i_ore, _) = x1.pair(xi);
        let (g_ore, _) = y1.pair(yi);
        let (mi, kk) = wcirc.pair(weak[wc.index_of(i_ore, i1).expect("W-composable")]);
        let (m, _) = mw.pair(mi);
        let right = ic
            .composite(m, g_ore)
            .and_then(|mg| ic.composite(mg, g2))
            .ok_or_else(|| Error::integrity("composite right leg is not composable"))?;
        rep.push(
            spn.index_of(kk, right)
                .ok_or_else(|| Error::integrity("composite is not a span"))?,
        );
    }
    let c_rep = FinMap::new(s2.object.clone(), spn.object.clone(), rep)?;
    let c_rep_q = c_rep.then(&quotient.quotient)?;
    let m2 = pullback(&t_l, &s_l)?;
    let r = m2.mediate(&s2.p0.then(&quotient.quotient)?, &s2.p1.then(&quotient.quotient)?)?;
    let c_l = factor_through_cover(&r, &c_rep_q).map_err(|e| match e {
        Error::Domain(msg) => Error::integrity(format!("composition is not well defined on classes: {msg}")),
        other => other,
    })?;

    // composable pairs of classes as a coequalizer of sailboat pairs
    let sb2 = pullback(&p0.then(&t_span)?, &p0.then(&s_span)?)?;
    let p0_sq = s2.mediate(&sb2.p0.then(&p0)?, &sb2.p1.then(&p0)?)?;
    let p1_sq = s2.mediate(&sb2.p0.then(&p1)?, &sb2.p1.then(&p1)?)?;
    let pair_classes = coequalize_reflexive(&p0_sq, &p1_sq)?;
    let comparison = pair_classes
        .factor(&r)
        .map_err(|e| Error::integrity(format!("pair classes do not refine composable pairs: {e}")))?;
    if !(comparison.is_injective() && comparison.is_surjective()) {
        return Err(Error::integrity(format!(
            "{} pair classes against {} composable pairs of classes",
            pair_classes.object.size, m2.object.size
        )));
    }

    let arrow_names = (0..l1.size)
        .map(|k| {
            let first = quotient
                .quotient
                .table()
                .iter()
                .position(|&x| x == k)
                .expect("inhabited");
            let (i, g) = spn.pair(first);
            format!("[{},{}]", ic.arrow_name(w.apply(i)), ic.arrow_name(g))
        })
        .collect();
    let object_names = (0..ic.c0.size).map(|x| ic.object_name(x).to_string()).collect();
    let retype = |m: FinMap, dom: &FinSet, cod: &FinSet| FinMap::new(dom.clone(), cod.clone(), m.table().to_vec());
    let category = InternalCategory::new(
        (
            retype(s_l, &l1, &ic.c0)?,
            retype(t_l, &l1, &ic.c0)?,
            retype(e_l, &ic.c0, &l1)?,
            retype(c_l, &m2.object, &l1)?,
        ),
        object_names,
        arrow_names,
    )?;
    let check = category.validate();
    if !check.is_valid() {
        return Err(Error::integrity(format!(
            "localized category object fails its laws:\n{check}"
        )));
    }
    Ok(InternalLocalization {
        category,
        spans: spn,
        sailboats: sb,
        quotient,
        composable_pairs: (pair_classes.object.size, m2.object.size),
    })
}
