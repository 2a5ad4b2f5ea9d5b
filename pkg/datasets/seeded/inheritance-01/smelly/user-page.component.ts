import { Component, Injectable } from '@angular/core';

export abstract class BaseUserPageComponent {
  pageTitle = '';
  initPage() {
    console.log(`Initializing page: ${this.pageTitle}`);
  }
}

@Component({
  selector: 'app-user-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class UserPageComponent extends BaseUserPageComponent {
  pageTitle = 'User Page';
}
