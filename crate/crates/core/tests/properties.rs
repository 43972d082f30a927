use msep::separators::{brute_force_minimal_separators, enumerate_minimal_separators, is_minimal_separator, Mode};
use msep::triangulation::{is_chordal, minimal_triangulations};
use msep::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

#[test]
fn branching_matches_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n);
        let brute = brute_force_minimal_separators(&g, 22).unwrap();
        for mode in [Mode::Balanced, Mode::All] {
            let r = enumerate_minimal_separators(&g, mode);
            assert_eq!(r.separators, brute, "{mode:?} on {:?}", g.edges().collect::<Vec<_>>());
            assert!(r.separators.iter().all(|s| is_minimal_separator(&g, s).unwrap()));
        }
    }
}

#[test]
fn minimal_triangulations_lose_chordality_without_any_fill_edge() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(4..=7);
        let g = random_graph(&mut rng, n);
        for t in minimal_triangulations(&g).unwrap() {
            let h = t.graph();
            assert!(is_chordal(&h));
            for &(u, v) in &t.fill {
                let rest: Vec<(usize, usize)> = h.edges().filter(|&e| e != (u, v)).collect();
                assert!(
                    !is_chordal(&Graph::new(n, rest).unwrap()),
                    "fill edge {u}-{v} removable"
                );
            }
        }
    }
}
