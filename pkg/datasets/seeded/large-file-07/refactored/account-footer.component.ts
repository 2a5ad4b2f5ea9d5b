import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-account-footer', template: `<p>{{ title }}</p>` })
export class AccountFooterComponent { title = 'Account footer'; }
