// Writes the built-in example fields as JSON fixtures.
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "fieldroute/io.hpp"
#include "fieldroute/synth.hpp"

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  using namespace fieldroute;

  CLI::App app{"Write the built-in example fields as JSON fixtures"};
  std::string dir = "fixtures";
  app.add_option("dir", dir, "output directory")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  fs::create_directories(dir);
  auto write = [&](const FieldComplex& fc, const std::string& stem) {
    fs::path path = fs::path(dir) / (stem + ".json");
    save_field(fc, path);
    std::cout << "wrote " << path.string() << "\n";
  };

  write(FieldComplex{synth::hex8(), {}}, "hex8");
  write(FieldComplex{synth::field1(), {}}, "field1");
  write(FieldComplex{synth::field2(), {}}, "field2");
  write(FieldComplex{synth::field3(), {}}, "field3");
  write(synth::tworing(), "tworing");
  return 0;
}
