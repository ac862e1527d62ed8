// Command-line front end: enumerate support tau-tilting exchange quivers,
// build skew group algebras, and machine-check the stability bijection.

#include <iostream>

#include <CLI11.hpp>

#include <stt/io.hpp>

int main(int argc, char** argv) {
  CLI::App app{"exact support tau-tilting workbench"};
  app.require_subcommand(1);

  std::string file, dot_path, json_path, field_override, seed_override;
  std::size_t max_vertices = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input JSON document")->required();
    cmd->add_option("--json", json_path, "write the JSON report here");
    cmd->add_option("--max-vertices", max_vertices, "abort past this many vertices");
    cmd->add_option("--field", field_override, "override the field (Q or Fp:p)");
    cmd->add_option("--seed", seed_override, "seed string recorded in reports");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "exchange quiver with stability marks");
  add_common(enumerate);
  enumerate->add_option("--dot", dot_path, "write DOT output here");

  CLI::App* skew = app.add_subcommand("skew", "skew group algebra summary");
  add_common(skew);

  CLI::App* verify = app.add_subcommand("verify", "run the stability bijection checks");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<stt::FieldSpec> field;
    if (!field_override.empty()) {
      if (field_override == "Q")
        field = stt::FieldSpec::rationals();
      else if (field_override.rfind("Fp:", 0) == 0)
        field = stt::FieldSpec::prime(std::stoll(field_override.substr(3)));
      else
        throw stt::input_error("bad --field (use Q or Fp:p)");
    }
    stt::InputDocument doc = stt::load_input_file(file, field);
    if (!seed_override.empty()) doc.seed = seed_override;
    if (max_vertices > 0) doc.max_vertices = max_vertices;

    if (app.got_subcommand(enumerate))
      return stt::cmd_enumerate(doc, dot_path, json_path, std::cout);
    if (app.got_subcommand(skew)) return stt::cmd_skew(doc, json_path, std::cout);
    return stt::cmd_verify(doc, json_path, std::cout);
  } catch (const stt::input_error& e) {
    std::cout << "input error: " << e.what() << "\n";
    return 2;
  }
}
