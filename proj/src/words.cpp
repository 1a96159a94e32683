#include "taskforge/task.hpp"

namespace forge {

void register_word_tasks(Registry& reg) { (void)reg; }

}  // namespace forge
