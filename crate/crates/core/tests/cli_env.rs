//! Kept in its own binary because it changes the process environment.

use tubex::cli::{run_with, MAX_NODES_ENV};

fn code(args: &[&str]) -> i32 {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    run_with(std::iter::once("tubex").chain(args.iter().copied()), &mut out, &mut err)
}

#[test]
fn node_limit_from_environment() {
    std::env::set_var(MAX_NODES_ENV, "2");
    assert_eq!(code(&["vertices", "--graph", "path:3"]), 3);
    assert_eq!(code(&["vertices", "--graph", "path:2"]), 0);
    assert_eq!(code(&["vertices", "--graph", "path:3", "--max-nodes", "3"]), 0);
    std::env::set_var(MAX_NODES_ENV, "6");
    assert_eq!(code(&["tubes", "--graph", "path:6"]), 0);
    std::env::set_var(MAX_NODES_ENV, "many");
    assert_eq!(code(&["tubes", "--graph", "path:2"]), 2);
    std::env::remove_var(MAX_NODES_ENV);
    assert_eq!(code(&["marked", "--graph", "path:6"]), 3);
}
