//! Oracle-versus-formula verification suites.
//!
//! Every record compares an expected value (a closed form, a published value
//! or a characterization) against the brute-force oracle. Set comparisons are
//! recorded as `"<size> members #<fingerprint>"`, so a record passes exactly
//! when the two sets are equal.

use std::fmt::Display;

use parkseq::classify::BoundaryVector;
use parkseq::count::*;
use parkseq::seq::for_each_in_box;
use parkseq::{
    gamma, gamma_inverse, ips_to_lattice_path, lattice_path_to_ips, Enumerator, ParkingInstance,
    Result,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const SUITES: [&str; 10] = [
    "all",
    "eq3",
    "table1",
    "catalan",
    "fuss",
    "determinant",
    "inv-characterizations",
    "strong",
    "sps-k",
    "bijections",
];

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub suite: String,
    pub name: String,
    pub params: Value,
    pub expected: String,
    pub provenance: String,
    pub computed: String,
    pub pass: bool,
}

pub struct Options {
    pub max_n: Option<usize>,
    pub seed: u64,
    pub enumerator: Enumerator,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_n: None,
            seed: DEFAULT_SEED,
            enumerator: Enumerator::default(),
        }
    }
}

struct Report<'a> {
    suite: &'a str,
    records: Vec<ReportRecord>,
}

impl<'a> Report<'a> {
    fn new(suite: &'a str) -> Self {
        Report {
            suite,
            records: Vec::new(),
        }
    }

    fn push(
        &mut self,
        name: &str,
        params: Value,
        expected: impl Display,
        provenance: &str,
        computed: impl Display,
    ) {
        let expected = expected.to_string();
        let computed = computed.to_string();
        self.records.push(ReportRecord {
            suite: self.suite.to_string(),
            name: name.to_string(),
            params,
            pass: expected == computed,
            expected,
            provenance: provenance.to_string(),
            computed,
        });
    }
}

/// Size plus a 64-bit FNV-1a digest of a lexicographically sorted set.
fn fingerprint(members: &[Vec<u32>]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for m in members {
        for &v in m.iter().chain(std::iter::once(&u32::MAX)) {
            for b in v.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        }
    }
    format!("{} members #{h:016x}", members.len())
}

fn inst(y: &[u32], z: u32) -> ParkingInstance {
    ParkingInstance::new(y.to_vec(), z).expect("suite instances are valid")
}

fn instance_params(i: &ParkingInstance) -> Value {
    json!({ "lengths": i.lengths(), "trailer": i.trailer() })
}

fn grid(max_n: usize, max_y: u32, max_z: u32) -> Vec<ParkingInstance> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for z in 1..=max_z {
            for_each_in_box(&vec![max_y; n], |y| out.push(inst(y, z)));
        }
    }
    out
}

fn box_filter(upper: &[u32], keep: impl Fn(&[u32]) -> bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_in_box(upper, |c| {
        if keep(c) {
            out.push(c.to_vec());
        }
    });
    out
}

fn sorted(c: &[u32]) -> Vec<u32> {
    let mut s = c.to_vec();
    s.sort_unstable();
    s
}

pub fn run_suite(name: &str, opts: &Options) -> Result<Vec<ReportRecord>> {
    let suites: &[&str] = if name == "all" { &SUITES[1..] } else { &[name] };
    let mut records = Vec::new();
    for &s in suites {
        records.extend(match s {
            "eq3" => eq3(opts)?,
            "table1" => table1(opts)?,
            "catalan" => catalan_suite(opts)?,
            "fuss" => fuss(opts)?,
            "determinant" => determinant(opts)?,
            "inv-characterizations" => invariance(opts)?,
            "strong" => strong(opts)?,
            "sps-k" => sps_k(opts)?,
            "bijections" => bijections(opts)?,
            other => {
                return Err(parkseq::ParkingError::OutOfDomain(format!(
                    "unknown suite {other:?}; expected one of {}",
                    SUITES.join(", ")
                )))
            }
        });
    }
    Ok(records)
}

fn eq3(opts: &Options) -> Result<Vec<ReportRecord>> {
    let mut r = Report::new("eq3");
    for i in grid(opts.max_n.unwrap_or(4), 3, 3) {
        let listed = opts.enumerator.ps(&i)?.cardinality;
        r.push(
            "ps count",
            instance_params(&i),
            count_ps_product(&i),
            "product formula",
            listed,
        );
    }
    Ok(r.records)
}

const INVARIANT_COUNTS: [(&[u32], u64); 8] = [
    (&[2, 2], 3),
    (&[2, 2, 1], 7),
    (&[2, 2, 1, 1], 31),
    (&[2, 2, 1, 1, 1], 171),
    (&[3, 3], 3),
    (&[3, 3, 1], 7),
    (&[3, 3, 1, 1], 13),
    (&[3, 3, 1, 1, 1], 51),
];

fn table1(opts: &Options) -> Result<Vec<ReportRecord>> {
    let mut r = Report::new("table1");
    for (y, want) in INVARIANT_COUNTS {
        let i = inst(y, 1);
        let listed = opts.enumerator.ps_inv(&i)?.cardinality;
        r.push(
            "invariant count",
            instance_params(&i),
            want,
            "published table",
            listed,
        );
    }
    Ok(r.records)
}

fn catalan_suite(opts: &Options) -> Result<Vec<ReportRecord>> {
    let mut r = Report::new("catalan");
    for n in 1..=opts.max_n.unwrap_or(6) {
        let i = inst(&vec![1; n], 1);
        let listed = opts.enumerator.ips(&i)?.cardinality;
        r.push(
            "ips count",
            instance_params(&i),
            catalan(n as u64),
            "Catalan number",
            &listed,
        );
        r.push(
            "constant-length formula",
            json!({ "k": 1, "n": n, "trailer": 1 }),
            &listed,
            "increasing-sequence oracle",
            count_ips_constant(1, n as u64, 1)?,
        );
    }
    Ok(r.records)
}

fn fuss(opts: &Options) -> Result<Vec<ReportRecord>> {
    let mut r = Report::new("fuss");
    let max_n = opts.max_n.unwrap_or(5);
    for (k, top) in [(2u32, max_n), (3, max_n.min(4))] {
        for n in 1..=top {
            let i = inst(&vec![k; n], 1);
            let listed = opts.enumerator.ips(&i)?.cardinality;
            let fc = fuss_catalan(k as u64, n as u64)?;
            r.push(
                "ips count",
                instance_params(&i),
                &fc,
                "Fuss-Catalan number",
                &listed,
            );
            r.push(
                "constant-length formula",
                json!({ "k": k, "n": n, "trailer": 1 }),
                &fc,
                "Fuss-Catalan number",
                count_ips_constant(k as u64, n as u64, 1)?,
            );
        }
    }
    Ok(r.records)
}

fn determinant(opts: &Options) -> Result<Vec<ReportRecord>> {
    let mut r = Report::new("determinant");
    let max_n = opts.max_n.unwrap_or(4);
    for i in grid(max_n, 3, 3) {
        let listed = opts.enumerator.ips(&i)?.cardinality;
        r.push(
            "ips count",
            instance_params(&i),
            count_ips_determinant(&i),
            "determinant",
            listed,
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..20 {
        let y: Vec<u32> = (0..max_n + 1).map(|_| rng.gen_range(1..=4)).collect();
        let i = inst(&y, rng.gen_range(1..=3));
        let listed = opts.enumerator.ips(&i)?.cardinality;
        let mut params = instance_params(&i);
        params["seed"] = json!(opts.seed);
        r.push(
            "sampled ips count",
            params,
            count_ips_determinant(&i),
            "determinant",
            listed,
        );
    }
    Ok(r.records)
}

fn two_block_lengths(a: u32, b: u32, r: usize, n: usize) -> Vec<u32> {
    let mut y = vec![a; r];
    y.extend(vec![b; n - r]);
    y
}

fn constant_condition_set(k: u32, n: usize, z: u32, m: u32) -> Vec<Vec<u32>> {
    box_filter(&vec![m; n], |c| {
        let s = sorted(c);
        (0..n).all(|t| s[t] <= z + t as u32 * k)
            && c.iter()
                .all(|&x| x <= z || (1..n as u32).any(|s| x == z + s * k))
    })
}

fn two_block_condition_set(a: u32, r: usize, n: usize, z: u32, m: u32) -> Vec<Vec<u32>> {
    box_filter(&vec![m; n], |c| {
        let s = sorted(c);
        s[..n - r + 1].iter().all(|&x| x <= z)
            && (2..=r).all(|j| {
                let x = s[n - r + j - 1];
                x <= z || (1..j as u32).any(|t| x == z + t * a)
            })
    })
}

fn gamma_image(z: u32, a: u32, members: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let mut image = members
        .iter()
        .map(|c| gamma(z, a, c))
        .collect::<Result<Vec<_>>>()?;
    image.sort_unstable();
    image.dedup();
    Ok(image)
}

fn invariance(opts: &Options) -> Result<Vec<ReportRecord>> {
    let e = &opts.enumerator;
    let mut r = Report::new("inv-characterizations");
    let max_n = opts.max_n.unwrap_or(4);
    for n in 1..=max_n {
        for z in 1..=3u32 {
            let mut increasing = Vec::new();
            for_each_in_box(&vec![4; n], |y| {
                if y.windows(2).all(|w| w[0] < w[1]) {
                    increasing.push(y.to_vec());
                }
            });
            for y in increasing {
                let i = inst(&y, z);
                let inv = e.ps_inv(&i)?;
                let cube = box_filter(&vec![z; n], |_| true);
                r.push(
                    "strictly increasing set",
                    instance_params(&i),
                    fingerprint(&cube),
                    "[z]^n",
                    fingerprint(&inv.members),
                );
                r.push(
                    "strictly increasing count",
                    instance_params(&i),
                    count_inv_strictly_increasing(n as u64, z as u64),
                    "z^n",
                    &inv.cardinality,
                );
            }

            for k in 1..=3u32 {
                let i = inst(&vec![k; n], z);
                let inv = e.ps_inv(&i)?;
                let want = constant_condition_set(k, n, z, i.street_length());
                r.push(
                    "constant set",
                    instance_params(&i),
                    fingerprint(&want),
                    "order-statistic and value conditions",
                    fingerprint(&inv.members),
                );
                r.push(
                    "constant count",
                    instance_params(&i),
                    count_inv_constant(n as u64, z as u64),
                    "z(n+z)^(n-1)",
                    &inv.cardinality,
                );
            }

            for blocks in 1..n {
                for b in 2..=3u32 {
                    for a in 1..b {
                        let i = inst(&two_block_lengths(a, b, blocks, n), z);
                        let inv = e.ps_inv(&i)?;
                        let want = two_block_condition_set(a, blocks, n, z, i.street_length());
                        let pf = e.u_pf(&BoundaryVector::two_block(z, n, blocks)?)?;
                        r.push(
                            "two-block set",
                            instance_params(&i),
                            fingerprint(&want),
                            "two-block conditions",
                            fingerprint(&inv.members),
                        );
                        r.push(
                            "two-block gamma image",
                            instance_params(&i),
                            fingerprint(&pf.members),
                            "u-parking functions",
                            fingerprint(&gamma_image(z, a, &inv.members)?),
                        );
                        r.push(
                            "two-block count",
                            instance_params(&i),
                            count_inv_two_block(n as u64, blocks as u64, z as u64)?,
                            "two-block sum",
                            &inv.cardinality,
                        );
                    }
                }
            }

            for a in 2..=3u32 {
                let mut y = vec![a];
                y.extend(vec![1; n - 1]);
                let i = inst(&y, z);
                let inv = e.ps_inv(&i)?;
                let pf = e.u_pf(&BoundaryVector::arithmetic(z, n)?)?;
                r.push(
                    "long-first set",
                    instance_params(&i),
                    fingerprint(&pf.members),
                    "u-parking functions, u = (z..z+n-1)",
                    fingerprint(&inv.members),
                );
                r.push(
                    "long-first count",
                    instance_params(&i),
                    count_inv_constant(n as u64, z as u64),
                    "z(n+z)^(n-1)",
                    &inv.cardinality,
                );
            }
        }
    }
    Ok(r.records)
}

fn strong(opts: &Options) -> Result<Vec<ReportRecord>> {
    let e = &opts.enumerator;
    let mut r = Report::new("strong");
    for i in grid(opts.max_n.unwrap_or(4), 3, 2) {
        let y = i.lengths();
        if y.iter().all(|&v| v == y[0]) {
            continue;
        }
        let by_def = e.sps(&i)?;
        let by_order = e.sps_standard_order(&i)?;
        r.push(
            "strong set",
            instance_params(&i),
            fingerprint(&by_order.members),
            "standard order on sorted lengths",
            fingerprint(&by_def.members),
        );
        r.push(
            "strong count",
            instance_params(&i),
            count_sps(&i),
            "z times partial-sum product",
            &by_def.cardinality,
        );
    }
    for z in 1..=3u32 {
        for (a, b) in [(1, 2), (1, 3), (2, 3), (2, 5)] {
            let want = box_filter(&[z, z + a], |_| true);
            for y in [[a, b], [b, a]] {
                let i = inst(&y, z);
                let got = e.sps(&i)?;
                r.push(
                    "two-car strong set",
                    instance_params(&i),
                    fingerprint(&want),
                    "[z] x [z+a]",
                    fingerprint(&got.members),
                );
            }
        }
    }
    Ok(r.records)
}

fn sps_k(opts: &Options) -> Result<Vec<ReportRecord>> {
    let e = &opts.enumerator;
    let mut r = Report::new("sps-k");
    let v = |xs: &[&[u32]]| xs.iter().map(|x| x.to_vec()).collect::<Vec<_>>();
    let listed = [
        (1, v(&[&[1]])),
        (2, v(&[&[1, 1], &[1, 2]])),
        (
            3,
            v(&[
                &[1, 1, 1],
                &[1, 1, 2],
                &[1, 1, 3],
                &[1, 2, 1],
                &[1, 2, 2],
                &[1, 2, 3],
                &[1, 3, 1],
                &[1, 3, 2],
                &[2, 1, 1],
                &[2, 1, 2],
                &[2, 1, 3],
                &[2, 2, 1],
                &[2, 3, 1],
                &[3, 1, 1],
                &[3, 1, 2],
                &[3, 2, 1],
            ]),
        ),
    ];
    for (k, want) in listed {
        let got = e.sps_k(3, k, 1)?;
        r.push(
            "listed set",
            json!({ "n": 3, "k": k, "trailer": 1 }),
            fingerprint(&want),
            "published listing",
            fingerprint(&got.members),
        );
    }
    let max_n = opts.max_n.unwrap_or(5);
    for n in 1..=max_n as u32 {
        for k in 1..=n as usize {
            for z in 1..=3u32 {
                let params = json!({ "n": n, "k": k, "trailer": z });
                let got = e.sps_k(n, k, z)?;
                let (want, why) = if k as u32 == n {
                    (count_u_pf_arithmetic(z as u64, n as u64), "z(n+z)^(n-1)")
                } else {
                    (rising_factorial(z as u64, k as u64), "rising factorial")
                };
                r.push("count", params.clone(), want, why, &got.cardinality);
                if n <= 4 {
                    let def = e.sps_k_by_definition(n, k, z)?;
                    r.push(
                        "definition",
                        params,
                        fingerprint(&got.members),
                        "intersection over compositions",
                        fingerprint(&def.members),
                    );
                }
            }
        }
    }
    Ok(r.records)
}

fn bijections(opts: &Options) -> Result<Vec<ReportRecord>> {
    let e = &opts.enumerator;
    let mut r = Report::new("bijections");
    let max_n = opts.max_n.unwrap_or(4);
    for i in grid(max_n, 3, 3) {
        let ips = e.ips(&i)?;
        let mut image = Vec::with_capacity(ips.len());
        let mut returned = Vec::with_capacity(ips.len());
        for c in &ips.members {
            let path = ips_to_lattice_path(&i, c)?;
            returned.push(lattice_path_to_ips(&i, &path)?);
            image.push(path.north_steps().to_vec());
        }
        image.sort_unstable();
        let boundary = BoundaryVector::new(ips_boundary(&i))?;
        let paths: Vec<Vec<u32>> = e
            .lattice_paths(&boundary, i.street_length())?
            .into_iter()
            .map(|p| p.north_steps().to_vec())
            .collect();
        r.push(
            "path image",
            instance_params(&i),
            fingerprint(&paths),
            "lattice paths under the boundary",
            fingerprint(&image),
        );
        r.push(
            "path round trip",
            instance_params(&i),
            fingerprint(&ips.members),
            "increasing-sequence oracle",
            fingerprint(&returned),
        );
    }

    for n in 1..=max_n {
        for z in 1..=3u32 {
            let mut cases = Vec::new();
            for k in 1..=3u32 {
                cases.push((vec![k; n], k, BoundaryVector::arithmetic(z, n)?));
            }
            for blocks in 1..n {
                for b in 2..=3u32 {
                    for a in 1..b {
                        cases.push((
                            two_block_lengths(a, b, blocks, n),
                            a,
                            BoundaryVector::two_block(z, n, blocks)?,
                        ));
                    }
                }
            }
            for (y, step, u) in cases {
                let i = inst(&y, z);
                let inv = e.ps_inv(&i)?;
                let pf = e.u_pf(&u)?;
                let image = inv
                    .members
                    .iter()
                    .map(|c| gamma(z, step, c))
                    .collect::<Result<Vec<_>>>()?;
                let back = image
                    .iter()
                    .map(|g| gamma_inverse(z, step, g))
                    .collect::<Result<Vec<_>>>()?;
                let mut image_sorted = image.clone();
                image_sorted.sort_unstable();
                let mut pf_back = pf
                    .members
                    .iter()
                    .map(|x| gamma_inverse(z, step, x))
                    .collect::<Result<Vec<_>>>()?;
                pf_back.sort_unstable();
                let params = instance_params(&i);
                r.push(
                    "gamma image",
                    params.clone(),
                    fingerprint(&pf.members),
                    "u-parking functions",
                    fingerprint(&image_sorted),
                );
                r.push(
                    "gamma inverse after gamma",
                    params.clone(),
                    fingerprint(&inv.members),
                    "invariant oracle",
                    fingerprint(&back),
                );
                r.push(
                    "gamma inverse image",
                    params,
                    fingerprint(&inv.members),
                    "invariant oracle",
                    fingerprint(&pf_back),
                );
            }
        }
    }
    Ok(r.records)
}
