use nbrecon::cli::run;
use serde_json::Value;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn nbrecon(args: &[&str], stdin: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nbrecon").chain(args.iter().copied());
    let code = run(argv, &mut || Ok(stdin.to_string()), &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(text: &str) -> Value {
    serde_json::from_str(text.trim()).unwrap()
}

const EXAMPLE_SUPPORT: &str =
    r#"{"universe":8,"sets":[[0,4],[0,1,2,5],[0,2,3,6,7],[0,1,2,3,5,6,7],[0,1,2,3,4,5,6,7]]}"#;

#[test]
fn support_of_a_graph6_graph() {
    let r = nbrecon(&["nbhd", "--closed", "--support", "-"], "DQc\n");
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.trim(), r#"{"universe":5,"sets":[[0,2],[1,3],[0,2,4],[0,3,4],[1,3,4]]}"#);

    let open = nbrecon(&["nbhd", "--open", "--multiset", "-"], "A_");
    assert_eq!(open.out.trim(), r#"{"universe":2,"sets":[[0],[1]]}"#);
}

#[test]
fn reconstruct_the_worked_example() {
    let r = nbrecon(&["reconstruct", "--from", "support", "-"], EXAMPLE_SUPPORT);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = json(&r.out);
    assert_eq!(v["verdict"], "unique");
    assert_eq!(v["graphs"][0]["edges"].as_array().unwrap().len(), 16);

    let dot = nbrecon(&["reconstruct", "--from", "support", "--dot", "-"], EXAMPLE_SUPPORT);
    assert!(dot.out.starts_with("graph G0 {"), "{}", dot.out);
}

#[test]
fn induced_c4_family_is_unique() {
    let family = r#"{"universe":5,"sets":[[0,1,3,4],[0,1,2],[1,2,3],[0,2,3],[0,4]]}"#;
    let r = nbrecon(&["reconstruct", "--from", "support", "-"], family);
    assert_eq!(r.code, 0, "{}", r.err);
    let edges = &json(&r.out)["graphs"][0]["edges"];
    assert_eq!(*edges, json("[[0,1],[0,3],[0,4],[1,2],[2,3]]"));
}

#[test]
fn ambiguous_c4() {
    let multiset = r#"{"universe":4,"sets":[[0,1,3],[0,1,2],[1,2,3],[0,2,3]]}"#;
    let r = nbrecon(&["reconstruct", "--from", "multiset", "--all", "-"], multiset);
    assert_eq!(r.code, 2);
    let v = json(&r.out);
    assert_eq!(v["verdict"], "ambiguous");
    assert_eq!(v["truncated"], false);
    assert_eq!(v["graphs"].as_array().unwrap().len(), 3);

    let capped = nbrecon(&["reconstruct", "--from", "multiset", "--all", "--limit", "2", "-"], multiset);
    let v = json(&capped.out);
    assert_eq!(v["graphs"].as_array().unwrap().len(), 2);
    assert_eq!(v["truncated"], true);

    let counted = nbrecon(&["reconstruct", "--from", "multiset", "--count", "-"], multiset);
    assert_eq!(counted.code, 2);
    assert_eq!(json(&counted.out)["stats"]["solutions"], 3);

    let first = nbrecon(&["reconstruct", "--from", "multiset", "-"], multiset);
    assert_eq!(first.code, 2);
}

#[test]
fn graph_inputs_use_their_own_invariant() {
    for from in ["multiset", "support", "dc"] {
        let r = nbrecon(&["reconstruct", "--from", from, "-"], "DQc");
        assert_eq!(r.code, 0, "{from}: {}", r.err);
        assert_eq!(json(&r.out)["graphs"][0]["graph6"], "DQc");
    }
    let c4 = nbrecon(&["reconstruct", "--from", "dc", "-"], "Cr");
    assert_eq!(c4.code, 2, "{}", c4.out);
}

#[test]
fn infeasible_inputs() {
    let r = nbrecon(&["reconstruct", "--from", "support", "-"], r#"{"universe":2,"sets":[[0],[0,1]]}"#);
    assert_eq!(r.code, 3);
    assert_eq!(json(&r.out)["verdict"], "infeasible");

    let odd = nbrecon(&["reconstruct", "--from", "multiset", "-"], r#"{"universe":2,"sets":[[0,1],[1]]}"#);
    assert_eq!(odd.code, 3);
}

#[test]
fn malformed_inputs_report_positions() {
    let r = nbrecon(&["reconstruct", "--from", "support", "-"], "{\"universe\": 3,\n \"sets\": [[0,]]}");
    assert_eq!(r.code, 1);
    assert!(r.err.contains("at byte 29"), "{}", r.err);

    let bad6 = nbrecon(&["nbhd", "-"], "D\x7f");
    assert_eq!(bad6.code, 1);
    assert!(bad6.err.contains("at byte 1"), "{}", bad6.err);

    let range = nbrecon(&["reconstruct", "--from", "support", "-"], r#"{"universe":2,"sets":[[0,2]]}"#);
    assert_eq!(range.code, 1);

    let family_as_graph = nbrecon(&["convex", "-"], EXAMPLE_SUPPORT);
    assert_eq!(family_as_graph.code, 1);

    assert_eq!(nbrecon(&["reconstruct", "-"], "DQc").code, 1);
    assert_eq!(nbrecon(&["nbhd", "/nonexistent/graph.g6"], "").code, 1);
}

#[test]
fn convex_sets() {
    let r = nbrecon(&["convex", "-"], "Bg");
    assert_eq!(r.code, 0, "{}", r.err);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines, ["[]", "[0]", "[2]", "[0,1,2]"]);

    let one = json(&nbrecon(&["convex", "--set", "0", "-"], "Bg").out);
    assert_eq!(one["convex"], true);
    let not = json(&nbrecon(&["convex", "--set", "1", "-"], "Bg").out);
    assert_eq!(not["convex"], false);

    let family = json(&nbrecon(&["convex", "--json", "-"], "Bg").out);
    assert_eq!(family["sets"].as_array().unwrap().len(), 4);
}

#[test]
fn convert_round_trip() {
    let to_json = nbrecon(&["convert", "--to", "json", "-"], "DQc");
    assert_eq!(to_json.code, 0);
    let back = nbrecon(&["convert", "--to", "graph6", "-"], &to_json.out);
    assert_eq!(back.out.trim(), "DQc");
    let dot = nbrecon(&["convert", "--to", "dot", "-"], "A_");
    assert!(dot.out.contains("0 -- 1;"), "{}", dot.out);
}

#[test]
fn labeled_graph_json() {
    let g = r#"{"labels":["a","b","c"],"adjacency":{"a":["b"],"b":["c"]}}"#;
    let r = nbrecon(&["nbhd", "--closed", "--support", "-"], g);
    let v = json(&r.out);
    assert_eq!(v["labels"], json(r#"["a","b","c"]"#));
    let rec = json(&nbrecon(&["reconstruct", "--from", "multiset", "-"], g).out);
    assert_eq!(rec["graphs"][0]["labels"], json(r#"["a","b","c"]"#));
}

#[test]
fn mine_and_verify() {
    let r = nbrecon(&["mine", "--n", "4", "--kind", "closed-support"], "");
    assert_eq!(r.code, 0, "{}", r.err);
    let groups: Vec<Value> = r.out.lines().map(json).collect();
    assert_eq!(groups.len(), 1);
    assert_eq!(groups[0]["members"].as_array().unwrap().len(), 3);
    assert_eq!(groups[0]["all_contain_induced_c4"], true);

    assert_eq!(nbrecon(&["mine", "--n", "7"], "").code, 1);
    assert_eq!(nbrecon(&["mine", "--n", "4", "--kind", "bogus"], "").code, 1);

    let v = nbrecon(&["verify", "--n", "4", "--samples", "20"], "");
    assert_eq!(v.code, 0, "{}", v.out);
    assert!(v.out.lines().map(json).all(|o| o["failures"] == 0));
}

#[test]
fn help_exits_cleanly() {
    let r = nbrecon(&["--help"], "");
    assert_eq!(r.code, 0);
    assert!(r.out.contains("reconstruct"));
    assert_eq!(nbrecon(&[], "").code, 1);
}
