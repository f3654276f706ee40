//! Per-case data. Each builder transcribes one triple: parameter spaces,
//! label maps, Harish-Chandra data, relations and transfer maps.

use super::*;
use crate::branching::BranchRule;
use crate::hilbert::{HilbertFactor, HilbertModel, LabelFamily};
use crate::rational::frac;

type R = Rational;

fn h(n: i64) -> R {
    frac(n, 2)
}

fn zeros(n: usize) -> Vec<R> {
    vec![int(0); n]
}

fn unit(n: usize, i: usize) -> Vec<R> {
    let mut v = zeros(n);
    v[i] = int(1);
    v
}

fn wv(v: Vec<R>) -> WeightVector {
    WeightVector::new(v)
}

fn amap(src: usize, f: impl Fn(&[R]) -> Vec<R>) -> AffineMap {
    AffineMap::from_fn(src, f)
}

fn refs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

fn names(g_tilde: String, h_tilde: String, g: String, h: String, k: String) -> GroupNames {
    GroupNames { g_tilde, h_tilde, g, h, k }
}

fn sym(name: &str, side: Side, method: EvalMethod) -> GeneratorSymbol {
    GeneratorSymbol { name: name.into(), side, method, imaginary_unit_normalized: false }
}

fn tilde_casimir(name: &str, factor: Option<usize>) -> GeneratorSymbol {
    sym(name, Side::P, EvalMethod::TildeCasimir { factor })
}

fn casimir(name: &str, on: LabelSide, factor: Option<usize>) -> GeneratorSymbol {
    let side = match on {
        LabelSide::Theta => Side::R,
        LabelSide::Tau => Side::Q,
    };
    sym(name, side, EvalMethod::Casimir { on, factor })
}

fn euler(name: &str, on: LabelSide, functional: Vec<R>) -> GeneratorSymbol {
    let side = match on {
        LabelSide::Theta => Side::R,
        LabelSide::Tau => Side::Q,
    };
    GeneratorSymbol {
        name: name.into(),
        side,
        method: EvalMethod::Euler { on, functional },
        imaginary_unit_normalized: true,
    }
}

/// `Σ c_i·s_i = 0`.
fn lin(label: &str, terms: &[(R, &str)]) -> RelationIdentity {
    RelationIdentity {
        label: label.into(),
        terms: terms.iter().map(|(c, s)| Term { coeff: c.clone(), factors: vec![(s.to_string(), 1)] }).collect(),
    }
}

fn rel(label: &str, terms: Vec<(R, Vec<(&str, u32)>)>) -> RelationIdentity {
    RelationIdentity {
        label: label.into(),
        terms: terms
            .into_iter()
            .map(|(c, fs)| Term { coeff: c, factors: fs.into_iter().map(|(s, p)| (s.to_string(), p)).collect() })
            .collect(),
    }
}

/// `S_τ(λ) = f(λ, τ)`, affine in both arguments.
fn transfer(ldim: usize, tdim: usize, f: impl Fn(&[R], &[R]) -> Vec<R>) -> TransferFamily {
    let full = AffineMap::from_fn(ldim + tdim, |x| f(&x[..ldim], &x[ldim..]));
    let linear: Matrix = full.matrix.iter().map(|row| row[..ldim].to_vec()).collect();
    let offset = AffineMap {
        source_dim: tdim,
        matrix: full.matrix.iter().map(|row| row[ldim..].to_vec()).collect(),
        offset: full.offset.clone(),
    };
    TransferFamily { linear, offset }
}

fn fam(group: GroupDescriptor, f: impl Fn(&R) -> Vec<R>) -> LabelFamily {
    LabelFamily::new(group, amap(1, |x| f(&x[0])))
}

fn pairing(left: LabelFamily, right: LabelFamily) -> HilbertFactor {
    HilbertFactor::Pairing { left, right }
}

fn free(degree: u32) -> HilbertFactor {
    HilbertFactor::Free { degree }
}

/// `(x, 0, …, 0)` with `n` coordinates.
fn first(n: usize, x: &R) -> Vec<R> {
    let mut v = zeros(n);
    v[0] = x.clone();
    v
}

/// Restricted roots `e_1` and kernel `e_2, …` for a sphere `SO(N)/SO(N−1)`.
fn sphere_ch(dim: usize) -> ChData {
    ChData { restricted_roots: vec![wv(unit(dim, 0))], kill: (1..dim).map(|i| wv(unit(dim, i))).collect() }
}

/// The sphere data transported by triality: root `½(1,1,1,1)`, kernel the
/// simple roots `e_i − e_{i+1}`.
fn triality_sphere_ch() -> ChData {
    ChData {
        restricted_roots: vec![wv(vec![h(1), h(1), h(1), h(1)])],
        kill: (0..3)
            .map(|i| {
                let mut v = unit(4, i);
                v[i + 1] = int(-1);
                wv(v)
            })
            .collect(),
    }
}

/// `M = I − 2uuᵀ` with `u = ½(1,−1,−1,−1)`: the involution of the `D4`
/// weight lattice with `M e₁ = ω₊` fixing `ρ`.
pub(crate) fn triality_matrix() -> Matrix {
    let s = [1, -1, -1, -1];
    (0..4).map(|i| (0..4).map(|j| int(i64::from(i == j)) - h(s[i] * s[j])).collect()).collect()
}

/// `#{(a₁,b₁,…,a_n,b_n) ∈ ℕ^{2n} descending : 2Σa − Σb = N}`.
pub fn combin_count(n: usize, total: u32) -> u64 {
    fn rec(pos: usize, len: usize, prev: i64, acc: i64, target: i64) -> u64 {
        if pos == len {
            return u64::from(acc == target);
        }
        let w = if pos % 2 == 0 { 2 } else { -1 };
        (0..=prev)
            .map(|x| {
                let next = acc + w * x;
                // Remaining terms pair as 2a − b ≥ 0, so the running sum never decreases past a pair.
                if pos % 2 == 1 && next > target {
                    0
                } else {
                    rec(pos + 1, len, x, next, target)
                }
            })
            .sum()
    }
    rec(0, 2 * n, i64::from(total), 0, i64::from(total))
}

pub(super) fn build(id: CaseId) -> Result<CaseRecord> {
    let n = id.size.unwrap_or(0);
    Ok(match id.tag {
        CaseTag::I => case_i(id, n),
        CaseTag::IPrime => case_i_prime(id, n),
        CaseTag::IiOdd => case_ii(id, n, true),
        CaseTag::IiEven => case_ii(id, n, false),
        CaseTag::Iii => case_iii(id, n),
        CaseTag::Iv => case_iv(id, n),
        CaseTag::V => case_v(id, n),
        CaseTag::VPrime => case_v_prime(id, n),
        CaseTag::Vi => case_vi(id),
        CaseTag::Vii => case_vii(id),
        CaseTag::Viii => case_viii(id),
        CaseTag::Ix => case_ix(id),
        CaseTag::X => case_x(id),
        CaseTag::Xi => case_xi(id),
        CaseTag::Xii => case_xii(id)?,
        CaseTag::Xiii => case_xiii(id, false)?,
        CaseTag::XiiiPrime => case_xiii(id, true)?,
        CaseTag::Xiv => case_xiv(id)?,
        CaseTag::Star => case_star(id),
    })
}

fn case_i(id: CaseId, n: usize) -> CaseRecord {
    let d = n + 1;
    let nn = n as i64;
    CaseRecord {
        id,
        names: names(
            format!("SO({})", 2 * n + 2),
            format!("SO({})", 2 * n + 1),
            format!("U({})", n + 1),
            format!("U({n})"),
            format!("U({n})×U(1)"),
        ),
        g_tilde: GroupDescriptor::so(2 * n + 2),
        g: GroupDescriptor::u(n + 1),
        k: GroupDescriptor::product(vec![GroupDescriptor::u(n), GroupDescriptor::u(1)]),
        theta_space: ParamSpace::new(&["k", "l"]).nonneg(0).nonneg(1),
        pi_space: ParamSpace::new(&["j"]).nonneg(0),
        tau_space: ParamSpace::new(&["c"]),
        theta_label: amap(2, |p| {
            let mut v = zeros(d);
            v[0] = p[0].clone();
            v[d - 1] = -p[1].clone();
            v
        }),
        pi_label: amap(1, |p| first(d, &p[0])),
        tau_label: amap(1, |p| {
            let mut v = zeros(d);
            v[n] = p[0].clone();
            v
        }),
        pi_of_theta: amap(2, |p| vec![&p[0] + &p[1]]),
        tau_of_theta: amap(2, |p| vec![&p[0] - &p[1]]),
        hc: HcData {
            restricted_weyl: WeylType::B(1),
            rho_a: wv(vec![int(nn)]),
            lambda_rho: amap(2, |p| vec![&p[0] + &p[1] + int(nn)]),
            embed: amap(1, |x| first(d, &x[0])),
            mu_rho: None,
        },
        transfer: transfer(1, 1, |l, t| {
            let mut v: Vec<R> = (0..d).map(|i| h(nn - 2 * i as i64)).collect();
            v[0] = (&l[0] + &t[0]) / int(2);
            v[d - 1] = (&t[0] - &l[0]) / int(2);
            v
        }),
        symbols: vec![
            tilde_casimir("C_Gt", None),
            casimir("C_G", LabelSide::Theta, None),
            casimir("C_K", LabelSide::Tau, Some(1)),
            euler("E_K", LabelSide::Tau, unit(d, n)),
        ],
        relations: vec![
            lin("casimir", &[(int(1), "C_Gt"), (int(-2), "C_G"), (int(1), "C_K")]),
            rel("euler-square", vec![(int(1), vec![("C_K", 1)]), (int(-1), vec![("E_K", 2)])]),
        ],
        generators: Generators { tilde: vec!["C_Gt".into()], fiber: vec!["E_K".into()] },
        degrees: Degrees { tilde: vec![2], fiber: vec![1] },
        table_ranks: (1, 1, 2),
        realized_ranks: (1, 1, 2),
        hilbert: Some(HilbertModel {
            factors: vec![
                pairing(
                    fam(GroupDescriptor::u(n), |i| first(n, i)),
                    fam(GroupDescriptor::u(n), |j| {
                        let mut v = zeros(n);
                        v[n - 1] = -j.clone();
                        v
                    }),
                ),
                free(1),
            ],
        }),
        ch: Some(sphere_ch(d)),
        branch: BranchRule::SphereToU { scale: 1 },
        alias_of: None,
    }
}

fn case_i_prime(id: CaseId, n: usize) -> CaseRecord {
    let base = case_i(id, n);
    let d = n + 1;
    let nn = n as i64;
    CaseRecord {
        names: names(
            format!("SO({})", 2 * n + 2),
            format!("SO({})", 2 * n + 1),
            format!("SU({})", n + 1),
            format!("SU({n})"),
            format!("U({n})"),
        ),
        g: GroupDescriptor::su(n + 1),
        k: GroupDescriptor::u(n),
        theta_label: amap(2, |p| {
            let mut v = vec![p[1].clone(); d];
            v[0] = &p[0] + &p[1];
            v[d - 1] = int(0);
            v
        }),
        tau_label: amap(1, |p| vec![-p[0].clone(); n]),
        symbols: vec![
            tilde_casimir("C_Gt", None),
            casimir("C_G", LabelSide::Theta, None),
            casimir("C_K", LabelSide::Tau, None),
            euler("E_K", LabelSide::Tau, vec![frac(-1, nn); n]),
        ],
        relations: vec![
            rel(
                "casimir",
                vec![
                    (int(1), vec![("C_Gt", 1)]),
                    (int(-2), vec![("C_G", 1)]),
                    (frac(nn - 1, nn + 1), vec![("E_K", 2)]),
                ],
            ),
            rel("euler-square", vec![(int(1), vec![("C_K", 1)]), (int(-nn), vec![("E_K", 2)])]),
        ],
        hilbert: None,
        ..base
    }
}

/// Case (ii) with `n = 2m−1` (`odd`) or `n = 2m`.
fn case_ii(id: CaseId, m: usize, odd: bool) -> CaseRecord {
    let mm = m as i64;
    let nk = if odd { m - 1 } else { m };
    let theta_dim = m + nk;
    let gt_dim = if odd { 2 * m } else { 2 * m + 1 };
    let (gt_n, g_n, k_n) = if odd { (4 * m, 4 * m - 1, 4 * m - 2) } else { (4 * m + 2, 4 * m + 1, 4 * m) };
    let j_names: Vec<String> = (1..=m).map(|i| format!("j{i}")).collect();
    let k_names: Vec<String> = (1..=nk).map(|i| format!("k{i}")).collect();
    let theta_names = alternating_concat(&j_names, &k_names).expect("lengths match");
    let theta_space = ParamSpace::new(&refs(&theta_names)).descending().nonneg(theta_dim - 1);
    let pi_space = ParamSpace::new(&refs(&j_names)).descending().nonneg(m - 1);
    let mut tau_space = ParamSpace::new(&refs(&k_names)).descending();
    if nk > 0 {
        tau_space = tau_space.nonneg(nk - 1);
    }
    // ϑ = (j₁,k₁,j₂,…): j at even positions, k at odd positions.
    let js = move |p: &[R]| -> Vec<R> { (0..m).map(|i| p[2 * i].clone()).collect() };
    let ks = move |p: &[R]| -> Vec<R> { (0..nk).map(|i| p[2 * i + 1].clone()).collect() };
    let doubled = |v: &[R]| -> Vec<R> { v.iter().flat_map(|x| [x.clone(), x.clone()]).collect() };
    let a_shift = if odd { 1 } else { 3 };
    let b_shift = if odd { -1 } else { 1 };
    let rho_a: Vec<R> = (1..=mm).map(|i| int(4 * mm - 4 * i + a_shift)).collect();
    let ranks = if odd { (m as u32, (m - 1) as u32, (2 * m - 1) as u32) } else { (m as u32, m as u32, (2 * m) as u32) };
    let kmax = if odd { 2 * m - 1 } else { 2 * m };
    let mut symbols =
        vec![tilde_casimir("C_Gt", None), casimir("C_G", LabelSide::Theta, None), casimir("C_K", LabelSide::Tau, None)];
    let mut relations = vec![lin("casimir", &[(int(1), "C_Gt"), (int(-2), "C_G"), (int(1), "C_K")])];
    for k in 1..=kmax {
        let e = 2 * k as u32;
        let (p, q, r) = (format!("P_{k}"), format!("Q_{k}"), format!("R_{k}"));
        symbols.push(sym(&p, Side::P, EvalMethod::LambdaPowerSum { exp: e }));
        symbols.push(sym(&q, Side::Q, EvalMethod::FiberPowerSum { exp: e }));
        symbols.push(sym(&r, Side::R, EvalMethod::CharPowerSum { exp: e }));
        let c = rational::pow(&int(2), e);
        relations.push(lin(&format!("power-sum-{k}"), &[(int(1), &p), (int(1), &q), (-c, &r)]));
    }
    let mut roots = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for s in [1, -1] {
                let mut v = zeros(gt_dim);
                v[2 * i] = h(1);
                v[2 * i + 1] = h(1);
                v[2 * j] = h(s);
                v[2 * j + 1] = h(s);
                roots.push(wv(v));
            }
        }
        let mut long = zeros(gt_dim);
        long[2 * i] = int(1);
        long[2 * i + 1] = int(1);
        roots.push(wv(long));
        if !odd {
            let mut short = zeros(gt_dim);
            short[2 * i] = h(1);
            short[2 * i + 1] = h(1);
            roots.push(wv(short));
        }
    }
    let mut kill: Vec<WeightVector> = (0..m)
        .map(|i| {
            let mut v = zeros(gt_dim);
            v[2 * i] = int(1);
            v[2 * i + 1] = int(-1);
            wv(v)
        })
        .collect();
    if !odd {
        kill.push(wv(unit(gt_dim, 2 * m)));
    }
    let tilde: Vec<String> = (1..=m).map(|k| format!("P_{k}")).collect();
    let fiber: Vec<String> = (1..=nk).map(|k| format!("Q_{k}")).collect();
    CaseRecord {
        id,
        names: names(
            format!("SO({gt_n})"),
            format!("U({})", gt_n / 2),
            format!("SO({g_n})"),
            format!("U({})", k_n / 2),
            format!("SO({k_n})"),
        ),
        g_tilde: GroupDescriptor::so(gt_n),
        g: GroupDescriptor::so(g_n),
        k: GroupDescriptor::so(k_n),
        theta_space,
        pi_space,
        tau_space,
        theta_label: AffineMap::identity(theta_dim),
        pi_label: amap(m, move |p| {
            let mut v = doubled(p);
            if !odd {
                v.push(int(0));
            }
            v
        }),
        tau_label: amap(nk, move |p| {
            let mut v = doubled(p);
            if odd {
                v.push(int(0));
            }
            v
        }),
        pi_of_theta: amap(theta_dim, js),
        tau_of_theta: amap(theta_dim, ks),
        hc: HcData {
            restricted_weyl: if odd { WeylType::C(m) } else { WeylType::BC(m) },
            rho_a: wv(rho_a.clone()),
            lambda_rho: amap(theta_dim, |p| js(p).iter().zip(&rho_a).map(|(j, r)| j * int(2) + r).collect()),
            embed: amap(m, |x| {
                let mut v: Vec<R> = x.iter().flat_map(|y| [y / int(2), y / int(2)]).collect();
                v.resize(gt_dim, int(0));
                v
            }),
            mu_rho: Some(amap(theta_dim, |p| {
                ks(p).iter().enumerate().map(|(i, k)| k * int(2) + int(4 * (mm - 1 - i as i64) + b_shift)).collect()
            })),
        },
        transfer: transfer(m, nk, |l, t| {
            let a: Vec<R> = l.iter().map(|x| x / int(2)).collect();
            let b: Vec<R> = t.iter().enumerate().map(|(i, k)| k + h(4 * (mm - 1 - i as i64) + b_shift)).collect();
            alternating_concat(&a, &b).expect("lengths match")
        }),
        symbols,
        relations,
        generators: Generators { tilde, fiber },
        degrees: Degrees {
            tilde: (1..=m as u32).map(|k| 2 * k).collect(),
            fiber: (1..=nk as u32).map(|k| 2 * k).collect(),
        },
        table_ranks: ranks,
        realized_ranks: ranks,
        hilbert: None,
        ch: Some(ChData { restricted_roots: roots, kill }),
        branch: BranchRule::InterlaceSo { m, trailing: !odd },
        alias_of: None,
    }
}

fn case_iii(id: CaseId, n: usize) -> CaseRecord {
    let nn = n as i64;
    let big = 2 * n + 2;
    CaseRecord {
        id,
        names: names(
            format!("SU({big})"),
            format!("U({})", 2 * n + 1),
            format!("Sp({})", n + 1),
            format!("Sp({n})×U(1)"),
            format!("Sp({n})×Sp(1)"),
        ),
        g_tilde: GroupDescriptor::su(big),
        g: GroupDescriptor::sp(n + 1),
        k: GroupDescriptor::product(vec![GroupDescriptor::sp(n), GroupDescriptor::sp(1)]),
        theta_space: ParamSpace::new(&["k", "l"]).ge_pair(0, 1).nonneg(1).even(&[1, -1], 0),
        pi_space: ParamSpace::new(&["j"]).nonneg(0),
        tau_space: ParamSpace::new(&["a"]).nonneg(0),
        theta_label: amap(2, |p| {
            let mut v = zeros(n + 1);
            v[0] = p[0].clone();
            v[1] = p[1].clone();
            v
        }),
        pi_label: amap(1, |p| {
            let mut v = vec![p[0].clone(); big];
            v[0] = &p[0] * int(2);
            v[big - 1] = int(0);
            v
        }),
        tau_label: amap(1, |p| {
            let mut v = zeros(n + 1);
            v[n] = &p[0] * int(2);
            v
        }),
        pi_of_theta: amap(2, |p| vec![(&p[0] + &p[1]) / int(2)]),
        tau_of_theta: amap(2, |p| vec![(&p[0] - &p[1]) / int(2)]),
        hc: HcData {
            restricted_weyl: WeylType::BC(1),
            rho_a: wv(vec![int(2 * nn + 1)]),
            lambda_rho: amap(2, |p| vec![&p[0] + &p[1] + int(2 * nn + 1)]),
            embed: amap(1, |x| {
                let mut v = zeros(big);
                v[0] = &x[0] / int(2);
                v[big - 1] = -&x[0] / int(2);
                v
            }),
            mu_rho: None,
        },
        transfer: transfer(1, 1, |l, t| {
            let mut v: Vec<R> = (0..=nn).map(|i| int(nn - i + 1)).collect();
            v[0] = &l[0] / int(2) + &t[0] + h(1);
            v[1] = &l[0] / int(2) - &t[0] - h(1);
            v
        }),
        symbols: vec![
            tilde_casimir("C_Gt", None),
            casimir("C_G", LabelSide::Theta, None),
            casimir("C_K", LabelSide::Tau, Some(1)),
        ],
        relations: vec![lin("casimir", &[(int(2), "C_Gt"), (int(-2), "C_G"), (int(1), "C_K")])],
        generators: Generators { tilde: vec!["C_Gt".into()], fiber: vec!["C_K".into()] },
        degrees: Degrees { tilde: vec![2], fiber: vec![2] },
        table_ranks: (1, 1, 2),
        realized_ranks: (1, 1, 2),
        hilbert: Some(HilbertModel {
            factors: vec![
                pairing(
                    fam(GroupDescriptor::u(1), |i| vec![i * int(2)]),
                    fam(GroupDescriptor::u(1), |j| vec![j * int(-2)]),
                ),
                pairing(fam(GroupDescriptor::sp(n), |i| first(n, i)), fam(GroupDescriptor::sp(n), |j| first(n, j))),
            ],
        }),
        ch: Some(ChData {
            restricted_roots: {
                let mut long = zeros(big);
                long[0] = int(1);
                long[big - 1] = int(-1);
                let short: Vec<R> = long.iter().map(|x| x / int(2)).collect();
                vec![wv(short), wv(long)]
            },
            kill: {
                let mut kill: Vec<WeightVector> = (1..big - 2)
                    .map(|i| {
                        let mut v = zeros(big);
                        v[i] = int(1);
                        v[i + 1] = int(-1);
                        wv(v)
                    })
                    .collect();
                let mut v = zeros(big);
                v[0] = int(1);
                v[big - 1] = int(1);
                v[1] = int(-1);
                v[big - 2] = int(-1);
                kill.push(wv(v));
                kill
            },
        }),
        branch: BranchRule::SuToSp,
        alias_of: None,
    }
}

fn case_iv(id: CaseId, n: usize) -> CaseRecord {
    let nn = n as i64;
    let j_names: Vec<String> = (1..=n + 1).map(|i| format!("j{i}")).collect();
    let k_names: Vec<String> = (1..=n).map(|i| format!("k{i}")).collect();
    let theta_names = alternating_concat(&j_names, &k_names).expect("lengths match");
    let mut tau_names = k_names.clone();
    tau_names.push("a".into());
    let mut tau_space = ParamSpace::new(&refs(&tau_names));
    for i in 1..n {
        tau_space = tau_space.ge_pair(i - 1, i);
    }
    let td = 2 * n + 1;
    let js = move |p: &[R]| -> Vec<R> { (0..=n).map(|i| p[2 * i].clone()).collect() };
    let ks = move |p: &[R]| -> Vec<R> { (0..n).map(|i| p[2 * i + 1].clone()).collect() };
    let doubled = |v: &[R]| -> Vec<R> { v.iter().flat_map(|x| [x.clone(), x.clone()]).collect() };
    let rho_a: Vec<R> = (1..=nn + 1).map(|i| int(2 * (nn - 2 * i + 2))).collect();
    let mut symbols = vec![
        tilde_casimir("C_Gt", None),
        casimir("C_G", LabelSide::Theta, None),
        casimir("C_K1", LabelSide::Tau, Some(0)),
        casimir("C_K2", LabelSide::Tau, Some(1)),
    ];
    let mut relations = vec![lin("casimir", &[(int(1), "C_Gt"), (int(-2), "C_G"), (int(1), "C_K1")])];
    for k in 1..=2 * n + 1 {
        let e = k as u32;
        let (p, q, r) = (format!("P_{k}"), format!("Q_{k}"), format!("R_{k}"));
        symbols.push(sym(&p, Side::P, EvalMethod::LambdaPowerSum { exp: e }));
        symbols.push(sym(&q, Side::Q, EvalMethod::FiberPowerSum { exp: e }));
        symbols.push(sym(&r, Side::R, EvalMethod::CharPowerSum { exp: e }));
        relations.push(lin(&format!("power-sum-{k}"), &[(int(1), &p), (int(1), &q), (-rational::pow(&int(2), e), &r)]));
    }
    let gt = 2 * n + 2;
    let mut roots = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            let mut v = zeros(gt);
            v[2 * i] = h(1);
            v[2 * i + 1] = h(1);
            v[2 * j] = h(-1);
            v[2 * j + 1] = h(-1);
            roots.push(wv(v));
        }
    }
    let kill = (0..=n)
        .map(|i| {
            let mut v = zeros(gt);
            v[2 * i] = int(1);
            v[2 * i + 1] = int(-1);
            wv(v)
        })
        .collect();
    CaseRecord {
        id,
        names: names(
            format!("SU({gt})"),
            format!("Sp({})", n + 1),
            format!("U({td})"),
            format!("Sp({n})×U(1)"),
            format!("U({})×U(1)", 2 * n),
        ),
        g_tilde: GroupDescriptor::u(gt),
        g: GroupDescriptor::u(td),
        k: GroupDescriptor::product(vec![GroupDescriptor::u(2 * n), GroupDescriptor::u(1)]),
        theta_space: ParamSpace::new(&refs(&theta_names)).descending(),
        pi_space: ParamSpace::new(&refs(&j_names)).descending(),
        tau_space,
        theta_label: AffineMap::identity(td),
        pi_label: amap(n + 1, doubled),
        tau_label: amap(n + 1, move |p| {
            let mut v = doubled(&p[..n]);
            v.push(p[n].clone());
            v
        }),
        pi_of_theta: amap(td, js),
        tau_of_theta: amap(td, move |p| {
            let mut v = ks(p);
            let sj = js(p).iter().fold(int(0), |a, x| a + x);
            let sk = ks(p).iter().fold(int(0), |a, x| a + x);
            v.push(sj - sk);
            v
        }),
        hc: HcData {
            restricted_weyl: WeylType::A(n),
            rho_a: wv(rho_a.clone()),
            lambda_rho: amap(td, |p| js(p).iter().zip(&rho_a).map(|(j, r)| j * int(2) + r).collect()),
            embed: amap(n + 1, |x| x.iter().flat_map(|y| [y / int(2), y / int(2)]).collect()),
            mu_rho: Some(amap(td, |p| {
                ks(p).iter().enumerate().map(|(i, k)| k * int(2) + int(2 * (nn - 2 * (i as i64 + 1) + 1))).collect()
            })),
        },
        transfer: transfer(n + 1, n + 1, |l, t| {
            let a: Vec<R> = l.iter().map(|x| x / int(2)).collect();
            let b: Vec<R> = (0..n).map(|i| &t[i] + int(nn - 2 * (i as i64 + 1) + 1)).collect();
            alternating_concat(&a, &b).expect("lengths match")
        }),
        symbols,
        relations,
        generators: Generators {
            tilde: (1..=n + 1).map(|k| format!("P_{k}")).collect(),
            fiber: (1..=n).map(|k| format!("Q_{k}")).collect(),
        },
        degrees: Degrees { tilde: (1..=n as u32 + 1).collect(), fiber: (1..=n as u32).collect() },
        table_ranks: (n as u32, n as u32, 2 * n as u32),
        realized_ranks: (n as u32 + 1, n as u32, 2 * n as u32 + 1),
        hilbert: Some(HilbertModel { factors: vec![HilbertFactor::Combin { n }, free(1)] }),
        ch: Some(ChData { restricted_roots: roots, kill }),
        branch: BranchRule::InterlaceU { n },
        alias_of: None,
    }
}

fn case_v(id: CaseId, n: usize) -> CaseRecord {
    let nn = n as i64;
    let gd = n + 2;
    CaseRecord {
        id,
        names: names(
            format!("SO({})", 4 * n + 4),
            format!("SO({})", 4 * n + 3),
            format!("Sp({})·Sp(1)", n + 1),
            format!("Sp({n})·Diag(Sp(1))"),
            format!("(Sp({n})×Sp(1))·Sp(1)"),
        ),
        g_tilde: GroupDescriptor::so(4 * n + 4),
        g: GroupDescriptor::almost_product(vec![GroupDescriptor::sp(n + 1), GroupDescriptor::sp(1)]),
        k: GroupDescriptor::almost_product(vec![
            GroupDescriptor::sp(n),
            GroupDescriptor::sp(1),
            GroupDescriptor::sp(1),
        ]),
        theta_space: ParamSpace::new(&["k", "l"]).ge_pair(0, 1).nonneg(1),
        pi_space: ParamSpace::new(&["j"]).nonneg(0),
        tau_space: ParamSpace::new(&["b"]).nonneg(0),
        theta_label: amap(2, |p| {
            let mut v = zeros(gd);
            v[0] = p[0].clone();
            v[1] = p[1].clone();
            v[n + 1] = &p[0] - &p[1];
            v
        }),
        pi_label: amap(1, |p| first(2 * n + 2, &p[0])),
        tau_label: amap(1, |p| {
            let mut v = zeros(gd);
            v[n] = p[0].clone();
            v[n + 1] = p[0].clone();
            v
        }),
        pi_of_theta: amap(2, |p| vec![&p[0] + &p[1]]),
        tau_of_theta: amap(2, |p| vec![&p[0] - &p[1]]),
        hc: HcData {
            restricted_weyl: WeylType::B(1),
            rho_a: wv(vec![int(2 * nn + 1)]),
            lambda_rho: amap(2, |p| vec![&p[0] + &p[1] + int(2 * nn + 1)]),
            embed: amap(1, |x| first(2 * n + 2, &x[0])),
            mu_rho: None,
        },
        transfer: transfer(1, 1, |l, t| {
            let mut v: Vec<R> = (0..gd).map(|i| int(nn + 1 - i as i64)).collect();
            v[0] = (&l[0] + &t[0] + int(1)) / int(2);
            v[1] = (&l[0] - &t[0] - int(1)) / int(2);
            v[n + 1] = &t[0] + int(1);
            v
        }),
        symbols: vec![
            tilde_casimir("C_Gt", None),
            casimir("C_G1", LabelSide::Theta, Some(0)),
            casimir("C_G2", LabelSide::Theta, Some(1)),
            casimir("C_K", LabelSide::Tau, Some(2)),
        ],
        relations: vec![
            lin("casimir", &[(int(1), "C_Gt"), (int(-2), "C_G1"), (int(1), "C_K")]),
            lin("diagonal", &[(int(1), "C_G2"), (int(-1), "C_K")]),
        ],
        generators: Generators { tilde: vec!["C_Gt".into()], fiber: vec!["C_K".into()] },
        degrees: Degrees { tilde: vec![2], fiber: vec![2] },
        table_ranks: (1, 1, 2),
        realized_ranks: (1, 1, 2),
        hilbert: Some(HilbertModel {
            factors: vec![
                pairing(fam(GroupDescriptor::sp(n), |i| first(n, i)), fam(GroupDescriptor::sp(n), |j| first(n, j))),
                free(2),
            ],
        }),
        ch: Some(sphere_ch(2 * n + 2)),
        branch: BranchRule::SphereToSpSp1,
        alias_of: None,
    }
}

fn case_v_prime(id: CaseId, n: usize) -> CaseRecord {
    let base = case_v(id, n);
    let nn = n as i64;
    let gd = n + 2;
    CaseRecord {
        names: names(
            format!("SO({})", 4 * n + 4),
            format!("SO({})", 4 * n + 3),
            format!("Sp({})·U(1)", n + 1),
            format!("Sp({n})·Diag(U(1))"),
            format!("(Sp({n})×Sp(1))·U(1)"),
        ),
        g: GroupDescriptor::almost_product(vec![GroupDescriptor::sp(n + 1), GroupDescriptor::u(1)]),
        k: GroupDescriptor::almost_product(vec![GroupDescriptor::sp(n), GroupDescriptor::sp(1), GroupDescriptor::u(1)]),
        theta_space: ParamSpace::new(&["k", "l", "c"])
            .ge_pair(0, 1)
            .nonneg(1)
            .ge(&[1, -1, -1], 0)
            .ge(&[1, -1, 1], 0)
            .even(&[1, -1, -1], 0),
        tau_space: ParamSpace::new(&["b", "c"]).abs_le(1, 0).even(&[1, -1], 0),
        theta_label: amap(3, |p| {
            let mut v = zeros(gd);
            v[0] = p[0].clone();
            v[1] = p[1].clone();
            v[n + 1] = p[2].clone();
            v
        }),
        tau_label: amap(2, |p| {
            let mut v = zeros(gd);
            v[n] = p[0].clone();
            v[n + 1] = p[1].clone();
            v
        }),
        pi_of_theta: amap(3, |p| vec![&p[0] + &p[1]]),
        tau_of_theta: amap(3, |p| vec![&p[0] - &p[1], p[2].clone()]),
        hc: HcData { lambda_rho: amap(3, |p| vec![&p[0] + &p[1] + int(2 * nn + 1)]), ..base.hc.clone() },
        transfer: transfer(1, 2, |l, t| {
            let mut v: Vec<R> = (0..gd).map(|i| int(nn + 1 - i as i64)).collect();
            v[0] = (&l[0] + &t[0] + int(1)) / int(2);
            v[1] = (&l[0] - &t[0] - int(1)) / int(2);
            v[n + 1] = t[1].clone();
            v
        }),
        symbols: vec![
            tilde_casimir("C_Gt", None),
            casimir("C_G1", LabelSide::Theta, Some(0)),
            euler("E_G", LabelSide::Theta, unit(gd, n + 1)),
            casimir("C_K", LabelSide::Tau, Some(1)),
            euler("E_K", LabelSide::Tau, unit(gd, n + 1)),
        ],
        relations: vec![
            lin("casimir", &[(int(1), "C_Gt"), (int(-2), "C_G1"), (int(1), "C_K")]),
            lin("euler", &[(int(1), "E_G"), (int(-1), "E_K")]),
        ],
        generators: Generators { tilde: vec!["C_Gt".into()], fiber: vec!["C_K".into(), "E_K".into()] },
        degrees: Degrees { tilde: vec![2], fiber: vec![2, 1] },
        table_ranks: (1, 1, 2),
        realized_ranks: (1, 2, 3),
        hilbert: None,
        branch: BranchRule::SphereToSpU1,
        ..base
    }
}

fn case_vi(id: CaseId) -> CaseRecord {
    CaseRecord {
        id,
        names: names("SO(16)".into(), "SO(15)".into(), "Spin(9)".into(), "Spin(7)".into(), "Spin(8)".into()),
        g_tilde: GroupDescriptor::so(16),
        g: GroupDescriptor::spin(9),
        k: GroupDescriptor::spin(8),
        theta_space: ParamSpace::new(&["j", "k"]).ge_pair(0, 1).nonneg(1).even(&[1, -1], 0),
        pi_space: ParamSpace::new(&["j"]).nonneg(0),
        tau_space: ParamSpace::new(&["k"]).nonneg(0),
        theta_label: amap(2, |p| vec![&p[0] / int(2), &p[1] / int(2), &p[1] / int(2), &p[1] / int(2)]),
        pi_label: amap(1, |p| first(8, &p[0])),
        tau_label: amap(1, |p| vec![&p[0] / int(2); 4]),
        pi_of_theta: amap(2, |p| vec![p[0].clone()]),
        tau_of_theta: amap(2, |p| vec![p[1].clone()]),
        hc: HcData {
            restricted_weyl: WeylType::B(1),
            rho_a: wv(vec![int(7)]),
            lambda_rho: amap(2, |p| vec![&p[0] + int(7)]),
            embed: amap(1, |x| first(8, &x[0])),
            mu_rho: None,
        },
        transfer: transfer(1, 1, |l, t| {
            vec![&l[0] / int(2), (&t[0] + int(5)) / int(2), (&t[0] + int(3)) / int(2), (&t[0] + int(1)) / int(2)]
        }),
        symbols: vec![
            tilde_casimir("C_Gt", None),
            casimir("C_G", LabelSide::Theta, None),
            casimir("C_K", LabelSide::Tau, None),
        ],
        relations: vec![lin("casimir", &[(int(1), "C_Gt"), (int(-4), "C_G"), (int(3), "C_K")])],
        generators: Generators { tilde: vec!["C_Gt".into()], fiber: vec!["C_K".into()] },
        degrees: Degrees { tilde: vec![2], fiber: vec![2] },
        table_ranks: (1, 1, 2),
        realized_ranks: (1, 1, 2),
        hilbert: Some(HilbertModel {
            factors: vec![
                pairing(
                    fam(GroupDescriptor::spin(7), |i| vec![i / int(2); 3]),
                    fam(GroupDescriptor::spin(7), |j| first(3, j)),
                ),
                free(2),
                free(2),
            ],
        }),
        ch: Some(sphere_ch(8)),
        branch: BranchRule::Spin9,
        alias_of: None,
    }
}

fn case_vii(id: CaseId) -> CaseRecord {
    CaseRecord {
        id,
        names: names("SO(8)".into(), "Spin(7)".into(), "SO(5)×SO(3)".into(), "ι7(SO(4))".into(), "SO(4)×SO(3)".into()),
        g_tilde: GroupDescriptor::so(8),
        g: GroupDescriptor::product(vec![GroupDescriptor::so(5), GroupDescriptor::so(3)]),
        k: GroupDescriptor::product(vec![GroupDescriptor::so(4), GroupDescriptor::so(3)]),
        theta_space: ParamSpace::new(&["j", "k"]).ge_pair(0, 1).nonneg(1),
        pi_space: ParamSpace::new(&["j"]).nonneg(0),
        tau_space: ParamSpace::new(&["k"]).nonneg(0),
        theta_label: amap(2, |p| vec![p[0].clone(), p[1].clone(), p[1].clone()]),
        pi_label: amap(1, |p| vec![p[0].clone(); 4]),
        tau_label: amap(1, |p| vec![p[0].clone(); 3]),
        pi_of_theta: amap(2, |p| vec![p[0].clone()]),
        tau_of_theta: amap(2, |p| vec![p[1].clone()]),
        hc: HcData {
            restricted_weyl: WeylType::B(1),
            rho_a: wv(vec![int(3)]),
            lambda_rho: amap(2, |p| vec![&p[0] * int(2) + int(3)]),
            embed: amap(1, |x| vec![&x[0] / int(2); 4]),
            mu_rho: None,
        },
        transfer: transfer(1, 1, |l, t| vec![&l[0] / int(2), &t[0] + h(1), &t[0] + h(1)]),
        symbols: vec![
            tilde_casimir("C_Gt", None),
            casimir("C_G1", LabelSide::Theta, Some(0)),
            casimir("C_G2", LabelSide::Theta, Some(1)),
            casimir("C_K1", LabelSide::Tau, Some(0)),
            casimir("C_K2", LabelSide::Tau, Some(1)),
        ],
        relations: vec![
            lin("casimir", &[(int(1), "C_Gt"), (int(-4), "C_G1"), (int(4), "C_G2")]),
            lin("fiber", &[(int(2), "C_G2"), (int(-1), "C_K1")]),
            lin("diagonal", &[(int(1), "C_G2"), (int(-1), "C_K2")]),
        ],
        generators: Generators { tilde: vec!["C_Gt".into()], fiber: vec!["C_K1".into()] },
        degrees: Degrees { tilde: vec![2], fiber: vec![2] },
        table_ranks: (1, 1, 2),
        realized_ranks: (1, 1, 2),
        hilbert: Some(HilbertModel {
            factors: vec![
                pairing(
                    fam(GroupDescriptor::sp(1), |i| vec![i.clone()]),
                    fam(GroupDescriptor::sp(1), |j| vec![j.clone()]),
                ),
                HilbertFactor::Invariants { family: fam(GroupDescriptor::so(3), |i| vec![i.clone()]) },
                free(2),
            ],
        }),
        ch: Some(triality_sphere_ch()),
        branch: BranchRule::Vii,
        alias_of: None,
    }
}

fn case_viii(id: CaseId) -> CaseRecord {
    let e3 = unit(3, 2);
    CaseRecord {
        id,
        names: names("SO(7)".into(), "G2(−14)".into(), "SO(5)×SO(2)".into(), "ι8(U(2))".into(), "SO(4)×SO(2)".into()),
        g_tilde: GroupDescriptor::so(7),
        g: GroupDescriptor::product(vec![GroupDescriptor::so(5), GroupDescriptor::so(2)]),
        k: GroupDescriptor::product(vec![GroupDescriptor::so(4), GroupDescriptor::so(2)]),
        theta_space: ParamSpace::new(&["j", "k", "a"]).ge_pair(0, 1).abs_le(2, 1),
        pi_space: ParamSpace::new(&["j"]).nonneg(0),
        tau_space: ParamSpace::new(&["k", "a"]).abs_le(1, 0),
        theta_label: AffineMap::identity(3),
        pi_label: amap(1, |p| vec![p[0].clone(); 3]),
        tau_label: amap(2, |p| vec![p[0].clone(), p[0].clone(), p[1].clone()]),
        pi_of_theta: amap(3, |p| vec![p[0].clone()]),
        tau_of_theta: amap(3, |p| vec![p[1].clone(), p[2].clone()]),
        hc: HcData {
            restricted_weyl: WeylType::B(1),
            rho_a: wv(vec![h(3)]),
            lambda_rho: amap(3, |p| vec![&p[0] + h(3)]),
            embed: amap(1, |x| vec![x[0].clone(); 3]),
            mu_rho: None,
        },
        transfer: transfer(1, 2, |l, t| vec![l[0].clone(), &t[0] + h(1), t[1].clone()]),
        symbols: vec![
            tilde_casimir("C_Gt", None),
            casimir("C_G1", LabelSide::Theta, Some(0)),
            euler("E_G", LabelSide::Theta, e3.clone()),
            casimir("C_K1", LabelSide::Tau, Some(0)),
            euler("E_K", LabelSide::Tau, e3),
        ],
        relations: vec![
            lin("euler", &[(int(1), "E_G"), (int(-1), "E_K")]),
            lin("casimir", &[(int(2), "C_Gt"), (int(-6), "C_G1"), (int(3), "C_K1")]),
        ],
        generators: Generators { tilde: vec!["C_Gt".into()], fiber: vec!["C_K1".into(), "E_K".into()] },
        degrees: Degrees { tilde: vec![2], fiber: vec![2, 1] },
        table_ranks: (1, 2, 3),
        realized_ranks: (1, 2, 3),
        hilbert: Some(HilbertModel {
            factors: vec![
                pairing(
                    fam(GroupDescriptor::sp(1), |i| vec![i.clone()]),
                    fam(GroupDescriptor::sp(1), |j| vec![j.clone()]),
                ),
                pairing(
                    fam(GroupDescriptor::u(1), |i| vec![i * int(2)]),
                    fam(GroupDescriptor::u(1), |j| vec![j * int(-2)]),
                ),
                free(1),
            ],
        }),
        ch: None,
        branch: BranchRule::Viii,
        alias_of: None,
    }
}

fn case_ix(id: CaseId) -> CaseRecord {
    CaseRecord {
        id,
        names: names("SO(7)".into(), "G2(−14)".into(), "SO(6)".into(), "SU(3)".into(), "U(3)".into()),
        g_tilde: GroupDescriptor::so(7),
        g: GroupDescriptor::so(6),
        k: GroupDescriptor::u(3),
        theta_space: ParamSpace::new(&["j", "k"]).abs_le(1, 0),
        pi_space: ParamSpace::new(&["j"]).nonneg(0),
        tau_space: ParamSpace::new(&["k"]),
        theta_label: amap(2, |p| vec![p[0].clone(), p[0].clone(), p[1].clone()]),
        pi_label: amap(1, |p| vec![p[0].clone(); 3]),
        tau_label: amap(1, |p| vec![p[0].clone(); 3]),
        pi_of_theta: amap(2, |p| vec![p[0].clone()]),
        tau_of_theta: amap(2, |p| vec![p[1].clone()]),
        hc: HcData {
            restricted_weyl: WeylType::B(1),
            rho_a: wv(vec![h(3)]),
            lambda_rho: amap(2, |p| vec![&p[0] + h(3)]),
            embed: amap(1, |x| vec![x[0].clone(); 3]),
            mu_rho: None,
        },
        transfer: transfer(1, 1, |l, t| vec![&l[0] + h(1), &l[0] - h(1), t[0].clone()]),
        symbols: vec![
            tilde_casimir("C_Gt", None),
            casimir("C_G", LabelSide::Theta, None),
            casimir("C_K", LabelSide::Tau, None),
            euler("E_K", LabelSide::Tau, vec![frac(1, 3); 3]),
        ],
        relations: vec![
            lin("casimir", &[(int(2), "C_Gt"), (int(-3), "C_G"), (int(1), "C_K")]),
            rel(
                "casimir-character-normalized",
                vec![(int(2), vec![("C_Gt", 1)]), (int(-3), vec![("C_G", 1)]), (int(3), vec![("E_K", 2)])],
            ),
        ],
        generators: Generators { tilde: vec!["C_Gt".into()], fiber: vec!["E_K".into()] },
        degrees: Degrees { tilde: vec![2], fiber: vec![1] },
        table_ranks: (1, 1, 2),
        realized_ranks: (1, 1, 2),
        hilbert: Some(HilbertModel {
            factors: vec![
                pairing(
                    fam(GroupDescriptor::u(3), |i| vec![i.clone(), i.clone(), int(0)]),
                    fam(GroupDescriptor::u(3), |j| vec![int(0), -j.clone(), -j.clone()]),
                ),
                free(1),
            ],
        }),
        ch: None,
        branch: BranchRule::Ix,
        alias_of: None,
    }
}

fn case_x(id: CaseId) -> CaseRecord {
    CaseRecord {
        id,
        names: names("SO(7)".into(), "SO(6)".into(), "G2(−14)".into(), "SU(3)".into(), "SU(3)".into()),
        g_tilde: GroupDescriptor::so(7),
        g: GroupDescriptor::g2(),
        k: GroupDescriptor::su(3),
        theta_space: ParamSpace::new(&["k"]).nonneg(0),
        pi_space: ParamSpace::new(&["k"]).nonneg(0),
        tau_space: ParamSpace::new(&[]),
        theta_label: amap(1, |p| vec![int(0), p[0].clone()]),
        pi_label: amap(1, |p| first(3, &p[0])),
        tau_label: amap(0, |_| zeros(3)),
        pi_of_theta: AffineMap::identity(1),
        tau_of_theta: amap(1, |_| Vec::new()),
        hc: HcData {
            restricted_weyl: WeylType::B(1),
            rho_a: wv(vec![h(5)]),
            lambda_rho: amap(1, |p| vec![&p[0] + h(5)]),
            embed: amap(1, |x| first(3, &x[0])),
            mu_rho: None,
        },
        transfer: transfer(1, 0, |l, _| vec![int(1), &l[0] - h(3)]),
        symbols: vec![tilde_casimir("C_Gt", None), casimir("C_G", LabelSide::Theta, None)],
        relations: vec![lin("casimir", &[(int(1), "C_Gt"), (int(-1), "C_G")])],
        generators: Generators { tilde: vec!["C_Gt".into()], fiber: vec![] },
        degrees: Degrees { tilde: vec![2], fiber: vec![] },
        table_ranks: (1, 0, 1),
        realized_ranks: (1, 0, 1),
        hilbert: Some(HilbertModel {
            factors: vec![pairing(
                fam(GroupDescriptor::u(3), |i| first(3, i)),
                fam(GroupDescriptor::u(3), |j| vec![int(0), int(0), -j.clone()]),
            )],
        }),
        ch: Some(sphere_ch(3)),
        branch: BranchRule::Identity,
        alias_of: None,
    }
}

fn case_xi(id: CaseId) -> CaseRecord {
    CaseRecord {
        id,
        names: names("SO(8)".into(), "Spin(7)".into(), "SO(7)".into(), "G2(−14)".into(), "G2(−14)".into()),
        g_tilde: GroupDescriptor::so(8),
        g: GroupDescriptor::so(7),
        k: GroupDescriptor::g2(),
        theta_space: ParamSpace::new(&["k"]).nonneg(0),
        pi_space: ParamSpace::new(&["k"]).nonneg(0),
        tau_space: ParamSpace::new(&[]),
        theta_label: amap(1, |p| vec![p[0].clone(); 3]),
        pi_label: amap(1, |p| vec![p[0].clone(); 4]),
        tau_label: amap(0, |_| zeros(2)),
        pi_of_theta: AffineMap::identity(1),
        tau_of_theta: amap(1, |_| Vec::new()),
        hc: HcData {
            restricted_weyl: WeylType::B(1),
            rho_a: wv(vec![int(3)]),
            lambda_rho: amap(1, |p| vec![&p[0] * int(2) + int(3)]),
            embed: amap(1, |x| vec![&x[0] / int(2); 4]),
            mu_rho: None,
        },
        transfer: transfer(1, 0, |l, _| vec![(&l[0] + int(2)) / int(2), &l[0] / int(2), (&l[0] - int(2)) / int(2)]),
        symbols: vec![tilde_casimir("C_Gt", None), casimir("C_G", LabelSide::Theta, None)],
        relations: vec![lin("casimir", &[(int(3), "C_Gt"), (int(-4), "C_G")])],
        generators: Generators { tilde: vec!["C_Gt".into()], fiber: vec![] },
        degrees: Degrees { tilde: vec![2], fiber: vec![] },
        table_ranks: (1, 0, 1),
        realized_ranks: (1, 0, 1),
        hilbert: Some(HilbertModel {
            factors: vec![
                HilbertFactor::Invariants { family: fam(GroupDescriptor::g2(), |i| vec![int(0), i.clone()]) },
                free(2),
            ],
        }),
        ch: Some(triality_sphere_ch()),
        branch: BranchRule::Identity,
        alias_of: None,
    }
}

fn case_star(id: CaseId) -> CaseRecord {
    let spin8 = GroupDescriptor::spin(8);
    CaseRecord {
        id,
        names: names(
            "Spin(8)×Spin(8)".into(),
            "Spin(7)×Spin(7)".into(),
            "Spin(8)".into(),
            "G2(−14)".into(),
            "Spin(7)".into(),
        ),
        g_tilde: GroupDescriptor::product(vec![spin8.clone(), spin8.clone()]),
        g: spin8,
        k: GroupDescriptor::spin(7),
        theta_space: ParamSpace::new(&["j", "j'", "a"])
            .nonneg(0)
            .nonneg(1)
            .ge(&[-1, 1, 1], 0)
            .ge(&[1, -1, 1], 0)
            .ge(&[1, 1, -1], 0)
            .even(&[1, 1, -1], 0),
        pi_space: ParamSpace::new(&["j", "j'"]).nonneg(0).nonneg(1),
        tau_space: ParamSpace::new(&["a"]).nonneg(0),
        theta_label: amap(3, |p| {
            vec![(&p[0] + &p[2]) / int(2), &p[1] / int(2), &p[1] / int(2), (&p[2] - &p[0]) / int(2)]
        }),
        pi_label: amap(2, |p| {
            let mut v = zeros(8);
            v[0] = p[0].clone();
            v[4] = p[1].clone();
            v
        }),
        tau_label: amap(1, |p| vec![&p[0] / int(2); 3]),
        pi_of_theta: amap(3, |p| vec![p[0].clone(), p[1].clone()]),
        tau_of_theta: amap(3, |p| vec![p[2].clone()]),
        hc: HcData {
            restricted_weyl: WeylType::Product(vec![WeylType::B(1), WeylType::B(1)]),
            rho_a: wv(vec![int(3), int(3)]),
            lambda_rho: amap(3, |p| vec![&p[0] + int(3), &p[1] + int(3)]),
            embed: amap(2, |x| {
                let mut v = zeros(8);
                v[0] = x[0].clone();
                v[4] = x[1].clone();
                v
            }),
            mu_rho: None,
        },
        transfer: transfer(2, 1, |l, t| {
            vec![
                (&l[0] + &t[0] + int(3)) / int(2),
                (&l[1] + int(1)) / int(2),
                (&l[1] - int(1)) / int(2),
                (&t[0] + int(3) - &l[0]) / int(2),
            ]
        }),
        symbols: vec![
            tilde_casimir("C_Gt1", Some(0)),
            tilde_casimir("C_Gt2", Some(1)),
            tilde_casimir("C_Gt", None),
            casimir("C_G", LabelSide::Theta, None),
            casimir("C_K", LabelSide::Tau, None),
        ],
        relations: vec![
            lin("casimir", &[(int(3), "C_Gt"), (int(-6), "C_G"), (int(4), "C_K")]),
            lin("factors", &[(int(1), "C_Gt"), (int(-1), "C_Gt1"), (int(-1), "C_Gt2")]),
        ],
        generators: Generators { tilde: vec!["C_Gt1".into(), "C_Gt2".into()], fiber: vec!["C_K".into()] },
        degrees: Degrees { tilde: vec![2, 2], fiber: vec![2] },
        table_ranks: (2, 1, 3),
        realized_ranks: (2, 1, 3),
        hilbert: Some(HilbertModel {
            factors: vec![
                pairing(
                    fam(GroupDescriptor::g2(), |i| vec![int(0), i.clone()]),
                    fam(GroupDescriptor::g2(), |j| vec![int(0), j.clone()]),
                ),
                free(2),
                free(2),
            ],
        }),
        ch: Some(ChData {
            restricted_roots: vec![wv(unit(8, 0)), wv(unit(8, 4))],
            kill: [1, 2, 3, 5, 6, 7].into_iter().map(|i| wv(unit(8, i))).collect(),
        }),
        branch: BranchRule::Star,
        alias_of: None,
    }
}

/// How an alias record is obtained from its target.
struct Transport {
    id: CaseId,
    names: GroupNames,
    g_tilde: GroupDescriptor,
    g: GroupDescriptor,
    k: GroupDescriptor,
    /// Target `ϑ` parameters are `theta_scale` times the alias parameters.
    theta_scale: R,
    /// Extra constraints on the alias `ϑ` parameters.
    theta_parity: Option<Vec<i64>>,
    /// Target `π` parameters are `pi_scale` times the alias parameters.
    pi_scale: R,
    /// Weight map on the Cartan of `G̃`.
    pi_map: Matrix,
    /// Weight map from the target's `G` coordinates to the alias's.
    g_map: Matrix,
    ch: Option<ChData>,
    branch: BranchRule,
    keep_hilbert: bool,
}

fn scaling(dim: usize, s: &R) -> AffineMap {
    amap(dim, |x| x.iter().map(|v| v * s).collect())
}

fn linear(m: &Matrix, source_dim: usize) -> AffineMap {
    AffineMap { source_dim, matrix: m.clone(), offset: zeros(m.len()) }
}

fn transport(target: CaseRecord, t: Transport) -> Result<CaseRecord> {
    let td = target.theta_space.dim();
    let pd = target.pi_space.dim();
    let s_theta = scaling(td, &t.theta_scale);
    let s_pi = scaling(pd, &t.pi_scale);
    let s_pi_inv = scaling(pd, &(int(1) / &t.pi_scale));
    let pi_lin = linear(&t.pi_map, target.g_tilde.dim());
    let g_lin = linear(&t.g_map, target.g.dim());
    let mut theta_space = target.theta_space.clone();
    if let Some(c) = &t.theta_parity {
        theta_space = theta_space.even(c, 0);
    }
    let hc = HcData {
        restricted_weyl: target.hc.restricted_weyl.clone(),
        rho_a: target.hc.rho_a.clone(),
        lambda_rho: target.hc.lambda_rho.compose(&s_theta)?,
        embed: pi_lin.compose(&target.hc.embed)?,
        mu_rho: target.hc.mu_rho.as_ref().map(|m| m.compose(&s_theta)).transpose()?,
    };
    let lin_t = linear(&target.transfer.linear, target.transfer.linear.first().map_or(0, Vec::len));
    let transfer =
        TransferFamily { linear: g_lin.compose(&lin_t)?.matrix, offset: g_lin.compose(&target.transfer.offset)? };
    Ok(CaseRecord {
        id: t.id,
        names: t.names,
        g_tilde: t.g_tilde,
        g: t.g,
        k: t.k,
        theta_space,
        pi_space: target.pi_space.clone(),
        tau_space: target.tau_space.clone(),
        theta_label: g_lin.compose(&target.theta_label)?.compose(&s_theta)?,
        pi_label: pi_lin.compose(&target.pi_label)?.compose(&s_pi)?,
        tau_label: target.tau_label.clone(),
        pi_of_theta: s_pi_inv.compose(&target.pi_of_theta)?.compose(&s_theta)?,
        tau_of_theta: target.tau_of_theta.compose(&s_theta)?,
        hc,
        transfer,
        symbols: target.symbols.clone(),
        relations: target.relations.clone(),
        generators: target.generators.clone(),
        degrees: target.degrees.clone(),
        table_ranks: target.table_ranks,
        realized_ranks: target.realized_ranks,
        hilbert: if t.keep_hilbert { target.hilbert.clone() } else { None },
        ch: t.ch,
        branch: t.branch,
        alias_of: Some(target.id),
    })
}

fn identity_matrix(n: usize) -> Matrix {
    (0..n).map(|i| unit(n, i)).collect()
}

fn case_xii(id: CaseId) -> Result<CaseRecord> {
    let target = case_xi(CaseId::fixed(CaseTag::Xi));
    transport(
        target,
        Transport {
            id,
            names: names("SO(8)".into(), "SO(7)".into(), "Spin(7)".into(), "G2(−14)".into(), "G2(−14)".into()),
            g_tilde: GroupDescriptor::so(8),
            g: GroupDescriptor::spin(7),
            k: GroupDescriptor::g2(),
            theta_scale: h(1),
            theta_parity: None,
            pi_scale: h(1),
            pi_map: triality_matrix(),
            g_map: identity_matrix(3),
            ch: Some(sphere_ch(4)),
            branch: BranchRule::Identity,
            keep_hilbert: true,
        },
    )
}

/// Cases (xiii) and (xiii)′: cases (i) and (i)′ with `n = 3` through triality.
fn case_xiii(id: CaseId, prime: bool) -> Result<CaseRecord> {
    let m = triality_matrix();
    let (target, g, g_name, k_name, g_map) = if prime {
        let drop: Matrix = m[1..].to_vec();
        (case_i_prime(CaseId::sized(CaseTag::IPrime, 3), 3), GroupDescriptor::so(6), "SO(6)", "U(3)", drop)
    } else {
        let reorder: Matrix = vec![m[1].clone(), m[2].clone(), m[3].clone(), m[0].clone()];
        (
            case_i(CaseId::sized(CaseTag::I, 3), 3),
            GroupDescriptor::product(vec![GroupDescriptor::so(6), GroupDescriptor::so(2)]),
            "SO(6)×SO(2)",
            "U(3)×SO(2)",
            reorder,
        )
    };
    let h_name = if prime { "SU(3)" } else { "ι13(Ũ(3))" };
    let k = target.k.clone();
    transport(
        target,
        Transport {
            id,
            names: names("SO(8)".into(), "Spin(7)".into(), g_name.into(), h_name.into(), k_name.into()),
            g_tilde: GroupDescriptor::so(8),
            g,
            k,
            theta_scale: int(1),
            theta_parity: Some(vec![1, 1]),
            pi_scale: int(2),
            pi_map: m,
            g_map,
            ch: Some(triality_sphere_ch()),
            branch: BranchRule::SphereToU { scale: 2 },
            keep_hilbert: !prime,
        },
    )
}

fn case_xiv(id: CaseId) -> Result<CaseRecord> {
    let target = case_ii(CaseId::sized(CaseTag::IiOdd, 2), 2, true);
    let mut roots = Vec::new();
    for (a, b) in [(1, -1), (1, 1), (1, 0), (0, 1)] {
        roots.push(wv(vec![int(a), int(b), int(0), int(0)]));
    }
    transport(
        target,
        Transport {
            id,
            names: names("SO(8)".into(), "SO(6)×SO(2)".into(), "Spin(7)".into(), "ι14(Ũ(3))".into(), "Spin(6)".into()),
            g_tilde: GroupDescriptor::so(8),
            g: GroupDescriptor::spin(7),
            k: GroupDescriptor::spin(6),
            theta_scale: int(1),
            theta_parity: None,
            pi_scale: int(1),
            pi_map: triality_matrix(),
            g_map: identity_matrix(3),
            ch: Some(ChData { restricted_roots: roots, kill: vec![wv(unit(4, 2)), wv(unit(4, 3))] }),
            branch: BranchRule::InterlaceSo { m: 2, trailing: false },
            keep_hilbert: false,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_apply(m: &Matrix, v: &[R]) -> Vec<R> {
        m.iter().map(|row| row.iter().zip(v).fold(int(0), |a, (x, y)| a + x * y)).collect()
    }

    #[test]
    fn triality_fixes_rho_and_moves_e1() {
        let m = triality_matrix();
        let rho = vec![int(3), int(2), int(1), int(0)];
        assert_eq!(mat_apply(&m, &rho), rho);
        assert_eq!(mat_apply(&m, &unit(4, 0)), vec![h(1); 4]);
        let sq: Vec<Vec<R>> = (0..4).map(|i| mat_apply(&m, &mat_apply(&m, &unit(4, i)))).collect();
        assert_eq!(sq, identity_matrix(4));
    }

    #[test]
    fn combin_counts() {
        assert_eq!(combin_count(1, 2), 2);
        assert_eq!((0..6).map(|s| combin_count(1, s)).collect::<Vec<_>>(), vec![1, 1, 2, 2, 3, 3]);
    }
}
