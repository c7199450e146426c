#include <cstdlib>
#include <iostream>

#include "readengine/cli.hpp"
#include "readengine/error.hpp"

int main(int argc, char** argv) {
  using namespace readengine;
  std::vector<std::string> args(argv + 1, argv + argc);
  cli::Config config = cli::default_config();
  if (const char* env = std::getenv("READ_ENGINE_CONFIG"); env != nullptr && *env != '\0') {
    try {
      config = cli::Config::load(env);
    } catch (const Error& e) {
      std::cerr << "{\"error\":\"" << e.kind() << "\",\"message\":\"READ_ENGINE_CONFIG: cannot load config\"}\n";
      return dynamic_cast<const ResourceError*>(&e) ? 2 : 1;
    }
  }
  return cli::run_command(args, config, std::cout, std::cerr).exit_code;
}
