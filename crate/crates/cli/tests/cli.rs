use std::process::{Command, Output};

fn affsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affsym")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.push("--json");
    let o = affsym(&a);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn rootinfo() {
    let v = json(&["rootinfo", "--type", "A3"]);
    assert_eq!(v["weyl_order"], 24);
    assert_eq!(v["minuscule_nodes"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["cartan_matrix"][0], serde_json::json!([2, -1, 0]));
}

#[test]
fn affine_element_from_the_pieri_example() {
    let o = affsym(&["affine", "--type", "A3", "--w", "s2 s1 s0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("length = 3"));
    assert!(text.contains("Grassmannian = true"));
    let v = json(&["affine", "--type", "A3", "--w", "tau1 t[-1,0,0]"]);
    // τ1 t_{-ϖ1} lies over -2ϖ1, the class of τ2 in P∨/Q∨ = Z/4
    let tau2 = json(&["affine", "--type", "A3", "--w", "tau2"]);
    assert_eq!(v["z_component"], tau2["z_component"]);
    assert_ne!(v["z_component"], 0);
}

#[test]
fn delta_expansion_json_is_stable() {
    let args = ["nilhecke", "--type", "A3", "--w", "s1 s2 s3", "--json"];
    let a = stdout(&affsym(&args));
    let b = stdout(&affsym(&args));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 8);
    assert_eq!(terms[0]["elem"], "e");
    assert_eq!(terms[1]["coeff"], "-a1");
    assert_eq!(terms[7]["elem"], "s1 s2 s3");
}

#[test]
fn json_and_text_render_the_same_value() {
    let text = stdout(&affsym(&["pieri", "--type", "A3", "--node", "1"]));
    let v = json(&["pieri", "--type", "A3", "--node", "1"]);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 24);
    for t in terms {
        assert!(text.contains(&format!("A[{}]", t["elem"].as_str().unwrap())));
    }
}

#[test]
fn homology_and_quantum_products() {
    let o = affsym(&["homology-product", "--type", "A1", "--w", "s0", "--w", "s0"]);
    assert_eq!(stdout(&o).trim(), "xi[s0] * xi[s0] = xi[s1 s0]");
    let o = affsym(&["quantum", "--type", "A2", "--parabolic", "2", "--node", "1", "--w", "s2 s1"]);
    assert_eq!(stdout(&o).trim(), "S[s2 s1] * S[s2 s1] = q[1]*S[s1]");
    let o = affsym(&["quantum", "--type", "A1", "--node", "1", "--w", "s1", "--equivariant"]);
    assert_eq!(stdout(&o).trim(), "S[s1] * (-a1 + S[s1]) = q[1]");
}

#[test]
fn jmap_methods_agree() {
    let a = json(&["jmap", "--type", "A2", "--w", "t[-1,-1]", "--method", "translation"]);
    let b = json(&["jmap", "--type", "A2", "--w", "t[-1,-1]", "--method", "solve"]);
    assert_eq!(a, b);
    assert_eq!(affsym(&["jmap", "--type", "A2", "--w", "s1 s0", "--method", "translation"]).status.code(), Some(2));
}

#[test]
fn verify_paper_passes_and_filters() {
    let o = affsym(&["verify-paper"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(!text.contains("FAIL"));
    let o = affsym(&["verify-paper", "--filter", "pieri"]);
    let lines: Vec<_> = stdout(&o).lines().filter(|l| l.starts_with("PASS")).map(String::from).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|l| l.contains("[pieri]")));
}

#[test]
fn sign_mutation_breaks_the_pieri_check() {
    let o = affsym(&["verify-paper", "--filter", "pieri", "--mutate-xi-sign"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("FAIL [pieri] Pieri expansion")));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(affsym(&["affine", "--type", "A2", "--w", "s5"]).status.code(), Some(2));
    assert_eq!(affsym(&["rootinfo"]).status.code(), Some(2));
    assert_eq!(affsym(&["rootinfo", "--type", "Q7"]).status.code(), Some(2));
    assert_eq!(affsym(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(affsym(&["quantum", "--type", "B3", "--node", "2", "--w", "e"]).status.code(), Some(2));
    let o = affsym(&["affine", "--type", "A2", "--w", "s1 x2"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte"));
}
