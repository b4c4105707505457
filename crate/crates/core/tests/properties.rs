use gcdpairs::graph::{self, ExactBounds};
use gcdpairs::numtheory::{
    divides, euler_phi, factorize, gcd, is_prime, phi_partial_sum, phi_table, prime_power_decompose,
};
use gcdpairs::oracle;
use gcdpairs::pairs::{
    self, canonical_residue, classify_elements, enumerate, is_gcd_pair, restrict, GcdPair, PairSet,
};
use proptest::prelude::*;

fn brute_phi(m: u64) -> u64 {
    (1..=m).filter(|&j| oracle::euclid(j, m) == 1).count() as u64
}

#[test]
fn phi_matches_brute_force_up_to_ten_thousand() {
    let table = phi_table(10_000);
    for m in 1..=10_000u64 {
        let want = brute_phi(m);
        assert_eq!(euler_phi(m).unwrap(), want, "phi({m})");
        assert_eq!(table[m as usize], want, "phi_table[{m}]");
    }
}

#[test]
fn enumerate_agrees_with_naive_up_to_five_hundred() {
    for n in 1..=500u64 {
        assert_eq!(
            enumerate(n).unwrap(),
            oracle::naive_enumerate(n).unwrap(),
            "n = {n}"
        );
        assert_eq!(pairs::count_pairs(n), oracle::naive_count(n), "n = {n}");
    }
}

#[test]
fn graph_edges_and_loops_follow_the_pair_set() {
    for n in 1..=200usize {
        let g = graph::build(n).unwrap();
        let ps = enumerate(n as u64).unwrap();
        let loops: Vec<usize> = ps
            .iter()
            .filter(|p| p.is_loop())
            .map(|p| p.first() as usize)
            .collect();
        assert_eq!(g.loops(), loops.as_slice(), "n = {n}");
        let want: Vec<(usize, usize)> = ps
            .iter()
            .filter(|p| !p.is_loop())
            .map(|p| (p.first() as usize, p.second() as usize))
            .collect();
        let got: Vec<(usize, usize)> = g.simple_edges().collect();
        assert_eq!(got, want, "n = {n}");
        assert_eq!(g.edge_count(), want.len());
    }
}

proptest! {
    #[test]
    fn gcd_divides_both_and_is_symmetric(a in 0u64..1_000_000, b in 0u64..1_000_000) {
        let g = gcd(a, b);
        prop_assert_eq!(g, gcd(b, a));
        prop_assert_eq!(g, oracle::euclid(a, b));
        if g > 0 {
            prop_assert!(divides(g, a) && divides(g, b));
        } else {
            prop_assert!(a == 0 && b == 0);
        }
    }

    #[test]
    fn summatory_totient_steps_by_phi(n in 2u64..3_000_000) {
        prop_assert_eq!(phi_partial_sum(n) - phi_partial_sum(n - 1), euler_phi(n).unwrap());
    }

    #[test]
    fn factorization_multiplies_back(n in 1u64..10_000_000) {
        let f = factorize(n);
        let product: u64 = f.iter().map(|&(p, k)| p.pow(k)).product();
        prop_assert_eq!(product, n);
        prop_assert!(f.iter().all(|&(p, _)| is_prime(p)));
        prop_assert!(f.windows(2).all(|w| w[0].0 < w[1].0));
        match prime_power_decompose(n) {
            Some(pp) => {
                prop_assert_eq!(f.len(), 1);
                prop_assert_eq!(pp.value(), n);
            }
            None => prop_assert!(f.len() != 1),
        }
    }

    #[test]
    fn pair_test_ignores_representative_and_order(
        n in 1u64..5_000,
        x in -1_000_000i64..1_000_000,
        y in -1_000_000i64..1_000_000,
        shift in -50i64..50,
    ) {
        let base = is_gcd_pair(n, x, y).unwrap();
        let moved = shift * n as i64;
        prop_assert_eq!(base, is_gcd_pair(n, x + moved, y - moved).unwrap());
        prop_assert_eq!(base, is_gcd_pair(n, y, x).unwrap());
        let a = canonical_residue(n, x).unwrap();
        let b = canonical_residue(n, y).unwrap();
        prop_assert_eq!(base, oracle::pair_test(n, a, b));
    }

    #[test]
    fn divisor_rows_are_all_pairs(n in 1u64..2_000, b in 0u64..2_000) {
        let b = b % n;
        for d in gcdpairs::numtheory::divisors(n) {
            if d < n {
                prop_assert!(oracle::pair_test(n, d, b));
            }
        }
    }

    #[test]
    fn restriction_is_a_filter(n in 1u64..120, picks in proptest::collection::vec(0u64..120, 0..30)) {
        let subset: Vec<u64> = picks.into_iter().map(|x| x % n).collect();
        let full = enumerate(n).unwrap();
        let sub = restrict(&full, &subset).unwrap();
        let want: Vec<[u64; 2]> = full
            .iter()
            .filter(|p| subset.contains(&p.first()) && subset.contains(&p.second()))
            .map(GcdPair::as_array)
            .collect();
        prop_assert_eq!(sub.to_arrays(), want);
        let mut members = subset.clone();
        members.sort_unstable();
        members.dedup();
        prop_assert_eq!(sub.len() as u64, oracle::naive_count_within(n, &members));
    }

    #[test]
    fn pair_sets_survive_json(n in 1u64..80, picks in proptest::collection::vec(0u64..80, 0..20)) {
        let full = enumerate(n).unwrap();
        let sets = [
            full.clone(),
            restrict(&full, &picks.iter().map(|x| x % n).collect::<Vec<_>>()).unwrap(),
        ];
        for ps in sets {
            let text = serde_json::to_string(&ps).unwrap();
            let back: PairSet = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(&back, &ps);
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        }
    }

    #[test]
    fn element_classes_and_cells_cover_z_n(n in 2u64..600) {
        let classes = classify_elements(n).unwrap();
        prop_assert_eq!(&classes.units, &oracle::naive_units(n));
        prop_assert_eq!(&classes.zero_divisors, &oracle::naive_zero_divisors(n));
        let cells = pairs::zero_divisor_partition(n).unwrap();
        let mut joined = cells.elements();
        joined.sort_unstable();
        prop_assert_eq!(joined.len(), classes.zero_divisors.len());
        prop_assert_eq!(&joined, &classes.zero_divisors);
        for (&d, members) in cells.cells() {
            prop_assert!(members.iter().all(|&a| gcd(a, n) == d));
        }
    }

    #[test]
    fn cells_match_unit_pairs(n in 4u64..400) {
        let cells = pairs::zero_divisor_partition(n).unwrap();
        for &d in cells.cells().keys() {
            let matched = pairs::sprime_unit_bijection(n, d).unwrap();
            let m = n / d;
            prop_assert_eq!(matched.len() as u64, pairs::unit_pair_count(m));
            let members = cells.cell(d).unwrap();
            prop_assert_eq!(matched.len() as u64, oracle::naive_count_within(n, members));
        }
    }

    #[test]
    fn every_count_formula_admits_the_true_count(n in 2u64..700) {
        let actual = oracle::naive_count(n);
        if let Some(pp) = prime_power_decompose(n) {
            let r = pairs::count_prime_power_formula(pp);
            prop_assert!(r.admits(actual), "n = {}: {:?} vs {}", n, r, actual);
        } else {
            let r = pairs::composite_lower_bound(n).unwrap();
            prop_assert!(r.admits(actual), "n = {}: {:?} vs {}", n, r, actual);
        }
        let zd = pairs::count_zero_divisor_pairs(n).unwrap();
        prop_assert_eq!(zd, oracle::naive_count_within(n, &oracle::naive_zero_divisors(n)));
        for r in pairs::zero_divisor_formulas(n).unwrap() {
            prop_assert!(r.admits(zd), "n = {}: {:?} vs {}", n, r, zd);
        }
    }

    #[test]
    fn clique_and_colouring_bracket_each_other(n in 1usize..=26) {
        let g = graph::build(n).unwrap();
        let bounds = ExactBounds::default();
        let w = graph::max_clique(&g, &bounds).unwrap();
        prop_assert!(graph::is_clique(&g, &w.vertices));
        prop_assert!(w.maximal && w.maximum);
        let greedy = graph::greedy_coloring(&g);
        prop_assert!(graph::is_proper_coloring(&g, &greedy.colors));
        prop_assert!(greedy.color_count >= w.order());
        let primes = gcdpairs::numtheory::primes_below(n as u64).len();
        if n >= 2 {
            prop_assert!(w.order() > primes);
        }
    }

    #[test]
    fn exact_searches_are_deterministic(n in 1usize..=16) {
        let g = graph::build(n).unwrap();
        let bounds = ExactBounds::default();
        prop_assert_eq!(
            graph::max_clique(&g, &bounds).unwrap(),
            graph::max_clique(&g, &bounds).unwrap()
        );
        prop_assert_eq!(
            graph::chromatic_number(&g, &bounds).unwrap(),
            graph::chromatic_number(&g, &bounds).unwrap()
        );
    }
}
