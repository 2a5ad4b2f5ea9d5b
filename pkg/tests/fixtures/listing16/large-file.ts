import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-header', template: `<h1>{{ title }}</h1>` })
export class HeaderComponent { title = 'Header'; }

@Component({ selector: 'app-footer', template: `<footer>Footer</footer>` })
export class FooterComponent {}

@Injectable({ providedIn: 'root' })
export class AnalyticsService {
  log(event: string) { console.log(event); }
}

@Injectable({ providedIn: 'root' })
export class UserService {
  getUser() { return { name: 'Alice' }; }
}

// ...
