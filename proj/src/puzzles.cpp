#include "taskforge/task.hpp"

namespace forge {

void register_puzzle_tasks(Registry& reg) { (void)reg; }

}  // namespace forge
