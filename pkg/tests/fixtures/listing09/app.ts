import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class AppService {
  getUser() { return { name: 'Alice' }; }
  getItems() { return ['a', 'b']; }
}

@Component({ selector: 'app-header', template: `<h1>{{ user.name }}</h1>` })
export class HeaderComponent {
  user = this.appService.getUser();
  constructor(private appService: AppService) {}
}

@Component({ selector: 'app-list', template: `<li *ngFor="let item of items">{{ item }}</li>` })
export class ListComponent {
  items = this.appService.getItems();
  constructor(private appService: AppService) {}
}
