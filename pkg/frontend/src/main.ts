import { api } from "./api";
import { initAutoTab } from "./tabs/auto";
import { initInteractiveTab } from "./tabs/interactive";
import { initManualTab } from "./tabs/manual";

const TABS = [
  { id: "manual", label: "Manual Search", init: initManualTab },
  { id: "auto", label: "Auto Query Generator", init: initAutoTab },
  { id: "interactive", label: "Interactive Query Generation", init: initInteractiveTab },
] as const;

function boot(): void {
  const app = document.getElementById("app");
  if (app === null) return;

  const nav = document.createElement("nav");
  nav.className = "tab-bar";
  const sections = new Map<string, HTMLElement>();

  for (const tab of TABS) {
    const button = document.createElement("button");
    button.type = "button";
    button.textContent = tab.label;
    button.dataset.tab = tab.id;
    button.addEventListener("click", () => select(tab.id));
    nav.appendChild(button);

    const section = document.createElement("section");
    section.className = "tab-panel";
    section.dataset.tab = tab.id;
    section.hidden = true;
    sections.set(tab.id, section);
  }

  function select(id: string): void {
    for (const [tabId, section] of sections) {
      section.hidden = tabId !== id;
    }
    for (const button of nav.querySelectorAll("button")) {
      button.classList.toggle("active", button.dataset.tab === id);
    }
  }

  app.appendChild(nav);
  for (const tab of TABS) {
    const section = sections.get(tab.id)!;
    app.appendChild(section);
    tab.init(section, api);
  }
  select("manual");
}

boot();
