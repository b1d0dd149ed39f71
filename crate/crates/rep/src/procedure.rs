use wt_laurent::LaurentPoly;
use wt_skein::{Normalizer, TangleElement};
use wt_tangle::{strand_graph, Connector, TangleWord, Vertex};

use crate::matrix::{all_indices, OperatorMatrix};
use crate::slices::{cap_factor, cup_factor};
use crate::RepError;

use wt_tangle::Orientation::{Down as D, Up as U};

fn label_of(v: Vertex, i: &[u32], j: &[u32]) -> u32 {
    match v {
        Vertex::Top(k) => i[k - 1],
        Vertex::Bottom(k) => j[k - 1],
    }
}

/// Factor of an open strand running along an edge of the box:
/// `q^{2i-n-1}` on the top edge left to right, `q^{-2i+n+1}` on the bottom
/// edge left to right, 1 otherwise.
fn horizontal_factor(start: Vertex, end: Vertex, label: u32, n: u32) -> LaurentPoly {
    match (start, end) {
        (Vertex::Top(a), Vertex::Top(b)) if a < b => cap_factor(D, U, label, n),
        (Vertex::Bottom(a), Vertex::Bottom(b)) if a < b => cup_factor(U, D, label, n),
        _ => LaurentPoly::one(),
    }
}

/// Every order of `0..labels.len()` that sorts by label, ties in any order.
fn refinements(labels: &[u32]) -> Vec<Vec<usize>> {
    let mut sorted: Vec<usize> = (0..labels.len()).collect();
    sorted.sort_by_key(|&a| (labels[a], a));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for a in sorted {
        match groups.last_mut() {
            Some(g) if labels[g[0]] == labels[a] => g.push(a),
            _ => groups.push(vec![a]),
        }
    }
    let mut out = vec![Vec::new()];
    for g in groups {
        let perms = permutations(&g);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                perms.iter().map(move |p| [prefix.as_slice(), p.as_slice()].concat())
            })
            .collect();
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

fn check_index(idx: &[u32], m: usize, n: u32) -> Result<(), RepError> {
    if idx.len() != m || idx.iter().any(|&k| k == 0 || k > n) {
        return Err(RepError::BadIndex { index: idx.to_vec(), n, m });
    }
    Ok(())
}

/// Matrix entry `(i, j)` of a tangle read off directly from its picture.
///
/// The tangle must be descending for an order of its strands refining the
/// order of their starting labels (smaller labels above), contain no closed
/// loops, and no strand may cross itself. The entry is 0 if some strand ends
/// at a label different from its start. The value is `q^{-1}` per positive and `q` per negative
/// crossing between equally labelled strands, times the horizontal strand
/// factors.
pub fn procedure_value(w: &TangleWord, i: &[u32], j: &[u32], n: u32) -> Result<LaurentPoly, RepError> {
    check_index(i, w.m(), n)?;
    check_index(j, w.m(), n)?;
    let g = strand_graph(w);
    let describe = || format!("{i:?}, {j:?}");
    if g.loop_count() > 0 {
        return Err(RepError::NotDescending(format!("{}: closed loops present", describe())));
    }
    if (0..g.open_count).any(|c| g.crossing_list().any(|x| x.over == c && x.under == c)) {
        return Err(RepError::NotDescending(format!("{}: a strand crosses itself", describe())));
    }
    let ends: Vec<(Vertex, Vertex)> =
        g.components[..g.open_count].iter().map(|c| (c.start.expect("open"), c.end.expect("open"))).collect();
    let labels: Vec<u32> = ends.iter().map(|&(s, _)| label_of(s, i, j)).collect();
    if !refinements(&labels).iter().any(|order| g.first_violation(order).is_none()) {
        return Err(RepError::NotDescending(describe()));
    }
    let mut value = LaurentPoly::one();
    for (&(s, e), &l) in ends.iter().zip(&labels) {
        if l != label_of(e, i, j) {
            return Ok(LaurentPoly::zero());
        }
        value *= horizontal_factor(s, e, l, n);
    }
    for x in g.crossing_list() {
        if labels[x.over] == labels[x.under] {
            value *= LaurentPoly::q_pow(-(x.sign as i64));
        }
    }
    Ok(value)
}

/// Entry `(i, j)` of an arbitrary word: the word is first rewritten as a
/// combination of tangles descending for the label order of `(i, j)`, then
/// each is evaluated as in [`procedure_value`].
pub fn procedure_entry(norm: &Normalizer, w: &TangleWord, i: &[u32], j: &[u32]) -> Result<LaurentPoly, RepError> {
    let s: Vec<u32> = w.ty().start_vertices().into_iter().map(|v| label_of(v, i, j)).collect();
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by_key(|&a| (s[a], a));
    procedure_entry_in_order(norm, w, i, j, &order)
}

/// [`procedure_entry`] with an explicit strand order (indices into the
/// canonical start order), which must refine the order of starting labels.
pub fn procedure_entry_in_order(
    norm: &Normalizer,
    w: &TangleWord,
    i: &[u32],
    j: &[u32],
    order: &[usize],
) -> Result<LaurentPoly, RepError> {
    let n = norm.n();
    check_index(i, w.m(), n)?;
    check_index(j, w.m(), n)?;
    let s: Vec<u32> = w.ty().start_vertices().into_iter().map(|v| label_of(v, i, j)).collect();
    let mut seen = order.to_vec();
    seen.sort_unstable();
    let is_perm = seen == (0..s.len()).collect::<Vec<_>>();
    if !is_perm || order.windows(2).any(|p| s[p[0]] > s[p[1]]) {
        return Err(RepError::InvalidArgument(format!("{order:?} does not refine the labels {s:?}")));
    }
    let mut total = LaurentPoly::zero();
    for (leaf, coeff) in norm.descend(w, &order).iter() {
        let (li, lj, v) = leaf_entry(&leaf.connector, &leaf.linking, &s, w.m(), n);
        if li == i && lj == j {
            total += &v * coeff;
        }
    }
    Ok(total)
}

/// Matrix of a linear combination of basis tangles; see
/// [`matrix_of_element_with`].
pub fn matrix_of_element(a: &TangleElement) -> OperatorMatrix {
    matrix_of_element_with(&Normalizer::new(a.n()), a)
}

/// Matrix of `a`, computed without slice matrices: for every labelling of
/// the strand starts the canonical word of each connector is rewritten to be
/// descending for the induced order, and each resulting diagram is
/// evaluated by the Procedure.
pub fn matrix_of_element_with(norm: &Normalizer, a: &TangleElement) -> OperatorMatrix {
    let ty = a.ty();
    let n = a.n();
    let mut out = OperatorMatrix::zero(ty.top.clone(), ty.bottom.clone(), n);
    for (c, p) in a.terms() {
        let word = norm.canonical(c);
        add_basis_matrix(norm, &mut out, &word, p);
    }
    out
}

fn add_basis_matrix(norm: &Normalizer, out: &mut OperatorMatrix, word: &TangleWord, p: &LaurentPoly) {
    let n = norm.n();
    let m = word.m();
    let starts = word.ty().start_vertices();
    for s in all_indices(n, starts.len()) {
        let mut order: Vec<usize> = (0..starts.len()).collect();
        order.sort_by_key(|&a| (s[a], a));
        for (leaf, coeff) in norm.descend(word, &order).iter() {
            let (i, j, v) = leaf_entry(&leaf.connector, &leaf.linking, &s, m, n);
            out.add_entry(i, j, &(&v * coeff * p)).expect("labels are in range");
        }
    }
}

fn leaf_entry(c: &Connector, linking: &[(usize, usize, i64)], s: &[u32], m: usize, n: u32) -> (Vec<u32>, Vec<u32>, LaurentPoly) {
    let (mut i, mut j) = (vec![0; m], vec![0; m]);
    let mut v = LaurentPoly::one();
    for (a, (start, end)) in c.edges().into_iter().enumerate() {
        for x in [start, end] {
            match x {
                Vertex::Top(k) => i[k - 1] = s[a],
                Vertex::Bottom(k) => j[k - 1] = s[a],
            }
        }
        v *= horizontal_factor(start, end, s[a], n);
    }
    for &(a, b, lk) in linking {
        if s[a] == s[b] {
            v *= LaurentPoly::q_pow(-lk);
        }
    }
    (i, j, v)
}
